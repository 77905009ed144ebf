// Copyright 2026 The tcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "thompson/plmap.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace thompson {

namespace {

// 2-adic valuation of a nonzero dyadic.
int64_t valuation(const Dyadic &x) {
    return static_cast<int64_t>(mpz_scan1(x.num().get_mpz_t(), 0)) - static_cast<int64_t>(x.exp());
}

// floor(log2(x)) for x > 0.
int64_t floor_log2(const Dyadic &x) {
    return static_cast<int64_t>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) - 1 - static_cast<int64_t>(x.exp());
}

Dyadic dyadic_from_integer(const mpz_class &z) { return Dyadic(z, 0); }

void sort_unique(std::vector<Dyadic> &v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

const char *carrier_name(Carrier c) { return c == Carrier::Interval ? "interval" : "circle"; }

// ---------------------------------------------------------------------------
// PLFragment

PLFragment::PLFragment(std::vector<Dyadic> xs, std::vector<Dyadic> ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw PreconditionError("PL fragment needs matching breakpoint lists of length >= 2");
    }
    std::vector<int64_t> slopes;
    for (size_t i = 0; i + 1 < xs.size(); i++) {
        Dyadic dx = xs[i + 1] - xs[i];
        Dyadic dy = ys[i + 1] - ys[i];
        if (dx.sign() <= 0) {
            throw PreconditionError("breakpoints not strictly increasing at " + xs[i + 1].str());
        }
        if (dy.sign() <= 0) {
            throw PreconditionError("images not strictly increasing at " + xs[i + 1].str());
        }
        auto k = log2_ratio(dy, dx);
        if (!k) {
            throw PreconditionError("slope on [" + xs[i].str() + ", " + xs[i + 1].str() +
                                    "] is not a power of two");
        }
        slopes.push_back(*k);
    }
    xs_.push_back(xs.front());
    ys_.push_back(ys.front());
    for (size_t i = 0; i < slopes.size(); i++) {
        if (i + 1 < slopes.size() && slopes[i] == slopes[i + 1]) {
            continue;
        }
        xs_.push_back(xs[i + 1]);
        ys_.push_back(ys[i + 1]);
        slopes_.push_back(slopes[i]);
    }
}

PLFragment PLFragment::identity(const Dyadic &lo, const Dyadic &hi) { return PLFragment({lo, hi}, {lo, hi}); }

Dyadic PLFragment::eval(const Dyadic &x) const {
    if (x < xs_.front() || x > xs_.back()) {
        throw PreconditionError("point " + x.str() + " outside fragment domain [" + xs_.front().str() + ", " +
                                xs_.back().str() + "]");
    }
    size_t i = std::upper_bound(xs_.begin(), xs_.end(), x) - xs_.begin();
    i = std::min(i == 0 ? 0 : i - 1, piece_count() - 1);
    return ys_[i] + (x - xs_[i]).mul_pow2(slopes_[i]);
}

Dyadic PLFragment::eval_inverse(const Dyadic &y) const {
    if (y < ys_.front() || y > ys_.back()) {
        throw PreconditionError("point " + y.str() + " outside fragment image [" + ys_.front().str() + ", " +
                                ys_.back().str() + "]");
    }
    size_t i = std::upper_bound(ys_.begin(), ys_.end(), y) - ys_.begin();
    i = std::min(i == 0 ? 0 : i - 1, piece_count() - 1);
    return xs_[i] + (y - ys_[i]).mul_pow2(-slopes_[i]);
}

PLFragment PLFragment::inverse() const { return PLFragment(ys_, xs_); }

PLFragment PLFragment::translated(const Dyadic &dx, const Dyadic &dy) const {
    std::vector<Dyadic> xs, ys;
    for (size_t i = 0; i < xs_.size(); i++) {
        xs.push_back(xs_[i] + dx);
        ys.push_back(ys_[i] + dy);
    }
    return PLFragment(std::move(xs), std::move(ys));
}

PLFragment PLFragment::then(const PLFragment &g) const {
    Dyadic shift = image_lo() - g.domain_lo();
    if (!shift.is_integer()) {
        throw PreconditionError("cannot compose fragments: image starts at " + image_lo().str() +
                                " but next domain starts at " + g.domain_lo().str());
    }
    PLFragment h = g.translated(shift, shift);
    if (h.domain_hi() != image_hi()) {
        throw PreconditionError("cannot compose fragments: image [" + image_lo().str() + ", " + image_hi().str() +
                                "] differs from next domain [" + g.domain_lo().str() + ", " + g.domain_hi().str() +
                                "]");
    }
    std::vector<Dyadic> xs = xs_;
    for (const Dyadic &y : h.xs_) {
        xs.push_back(eval_inverse(y));
    }
    sort_unique(xs);
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (const Dyadic &x : xs) {
        ys.push_back(h.eval(eval(x)));
    }
    return PLFragment(std::move(xs), std::move(ys));
}

std::string PLFragment::str() const {
    std::ostringstream out;
    out << "[";
    for (size_t i = 0; i < xs_.size(); i++) {
        out << (i ? ", " : "") << "(" << xs_[i] << ", " << ys_[i] << ")";
    }
    out << "]";
    return out.str();
}

// ---------------------------------------------------------------------------
// PLMap

PLMap PLMap::identity(Carrier carrier) { return PLMap(carrier, PLFragment::identity(0, 1)); }

PLMap PLMap::from_lift(Carrier carrier, const PLFragment &lift) {
    if (lift.domain_lo() != Dyadic(0) || lift.domain_hi() != Dyadic(1)) {
        throw PreconditionError("lift must be given on [0, 1]");
    }
    return from_period(carrier, lift);
}

PLMap PLMap::from_period(Carrier carrier, const PLFragment &period) {
    const Dyadic &t = period.domain_lo();
    if (period.domain_hi() - t != Dyadic(1)) {
        throw PreconditionError("a period of the lift must have domain length 1");
    }
    if (period.image_hi() - period.image_lo() != Dyadic(1)) {
        throw PreconditionError("a period of the lift must have image length 1 (not a bijection of the carrier)");
    }
    std::vector<Dyadic> xs{Dyadic(0), Dyadic(1)};
    for (const Dyadic &x : period.xs()) {
        xs.push_back(x.frac());
    }
    sort_unique(xs);
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (const Dyadic &x : xs) {
        Dyadic moved = t + (x - t).frac();
        if (x == Dyadic(1) && moved == t) {
            moved = t + Dyadic(1);
        }
        ys.push_back(period.eval(moved) - (moved - x));
    }
    Dyadic base = dyadic_from_integer(ys.front().floor());
    for (Dyadic &y : ys) {
        y -= base;
    }
    if (carrier == Carrier::Interval && ys.front().sign() != 0) {
        throw PreconditionError("an element of F must fix 0 (maps 0 to " + ys.front().str() + ")");
    }
    return PLMap(carrier, PLFragment(std::move(xs), std::move(ys)));
}

PLMap PLMap::from_points(Carrier carrier, std::vector<std::pair<Dyadic, Dyadic>> points) {
    if (points.empty()) {
        throw PreconditionError("no breakpoints given");
    }
    for (auto &[x, y] : points) {
        if (x < Dyadic(0) || x >= Dyadic(1) || y < Dyadic(0) || y >= Dyadic(1)) {
            throw PreconditionError("circle points must lie in [0, 1)");
        }
    }
    std::sort(points.begin(), points.end());
    std::vector<Dyadic> xs, ys;
    for (size_t i = 0; i < points.size(); i++) {
        if (i > 0 && points[i].first == points[i - 1].first) {
            throw PreconditionError("repeated breakpoint " + points[i].first.str());
        }
        xs.push_back(points[i].first);
        if (i == 0) {
            ys.push_back(points[i].second);
        } else {
            Dyadic step = (points[i].second - points[i - 1].second).frac();
            if (step.sign() == 0) {
                throw PreconditionError("two breakpoints have the same image " + points[i].second.str());
            }
            ys.push_back(ys.back() + step);
        }
    }
    xs.push_back(xs.front() + Dyadic(1));
    ys.push_back(ys.front() + Dyadic(1));
    if (ys[ys.size() - 2] >= ys.back()) {
        throw PreconditionError("images wind more than once around the circle");
    }
    return from_period(carrier, PLFragment(std::move(xs), std::move(ys)));
}

Dyadic PLMap::eval_lift(const Dyadic &x) const {
    Dyadic m = dyadic_from_integer(x.floor());
    return lift_.eval(x - m) + m;
}

Dyadic PLMap::eval_inverse_lift(const Dyadic &y) const {
    Dyadic m = dyadic_from_integer((y - lift_.image_lo()).floor());
    return lift_.eval_inverse(y - m) + m;
}

Dyadic PLMap::eval(const Dyadic &x) const {
    if (carrier_ == Carrier::Interval) {
        if (x < Dyadic(0) || x > Dyadic(1)) {
            throw PreconditionError("point " + x.str() + " outside [0, 1]");
        }
        return lift_.eval(x);
    }
    return eval_lift(x).frac();
}

std::vector<Dyadic> PLMap::breakpoints() const {
    std::vector<Dyadic> out;
    size_t n = lift_.piece_count();
    if (carrier_ == Carrier::Circle && lift_.log2_slope(0) != lift_.log2_slope(n - 1)) {
        out.push_back(Dyadic(0));
    }
    for (size_t i = 1; i < n; i++) {
        out.push_back(lift_.xs()[i]);
    }
    return out;
}

bool PLMap::is_identity() const { return lift_ == PLFragment::identity(0, 1); }

PLMap PLMap::as_circle() const { return PLMap(Carrier::Circle, lift_); }

PLMap PLMap::as_interval() const {
    if (!fixes_zero()) {
        throw PreconditionError("map does not fix 0, so it is not an element of F");
    }
    return PLMap(Carrier::Interval, lift_);
}

PLFragment PLMap::restrict(const Dyadic &lo, const Dyadic &hi) const {
    Dyadic len = hi - lo;
    if (len.sign() <= 0 || len > Dyadic(1)) {
        throw PreconditionError("restriction interval [" + lo.str() + ", " + hi.str() + "] must have length in (0, 1]");
    }
    std::vector<Dyadic> xs{lo, hi};
    mpz_class first = lo.floor() - 1;
    mpz_class last = hi.floor() + 1;
    for (mpz_class m = first; m <= last; ++m) {
        Dyadic shift = dyadic_from_integer(m);
        for (const Dyadic &x : lift_.xs()) {
            Dyadic y = x + shift;
            if (y > lo && y < hi) {
                xs.push_back(y);
            }
        }
    }
    sort_unique(xs);
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (const Dyadic &x : xs) {
        ys.push_back(eval_lift(x));
    }
    return PLFragment(std::move(xs), std::move(ys));
}

PLFragment PLMap::restrict_arc(const CirclePoint &from, const CirclePoint &to) const {
    return restrict(from.pos(), from.pos() + from.arc_length_to(to));
}

// ---------------------------------------------------------------------------
// Group operations

namespace {

Carrier joint_carrier(const PLMap &f, const PLMap &g) {
    return f.carrier() == Carrier::Interval && g.carrier() == Carrier::Interval ? Carrier::Interval
                                                                                 : Carrier::Circle;
}

}  // namespace

PLMap compose(const PLMap &f, const PLMap &g) {
    std::vector<Dyadic> xs = f.lift().xs();
    for (const Dyadic &y : g.lift().xs()) {
        xs.push_back(f.eval_inverse_lift(y).frac());
    }
    sort_unique(xs);
    std::vector<Dyadic> ys;
    ys.reserve(xs.size());
    for (const Dyadic &x : xs) {
        ys.push_back(g.eval_lift(f.eval_lift(x)));
    }
    if (xs.back() != Dyadic(1)) {
        xs.push_back(Dyadic(1));
        ys.push_back(ys.front() + Dyadic(1));
    }
    return PLMap::from_period(joint_carrier(f, g), PLFragment(std::move(xs), std::move(ys)));
}

PLMap inverse(const PLMap &f) {
    std::vector<Dyadic> xs{Dyadic(0)};
    for (const Dyadic &y : f.lift().ys()) {
        xs.push_back(y.frac());
    }
    sort_unique(xs);
    std::vector<Dyadic> ys;
    for (const Dyadic &x : xs) {
        ys.push_back(f.eval_inverse_lift(x));
    }
    xs.push_back(Dyadic(1));
    ys.push_back(ys.front() + Dyadic(1));
    return PLMap::from_period(f.carrier(), PLFragment(std::move(xs), std::move(ys)));
}

PLMap conjugate(const PLMap &f, const PLMap &g) { return compose(compose(inverse(g), f), g); }

PLMap commutator(const PLMap &f, const PLMap &g) {
    return compose(compose(inverse(f), inverse(g)), compose(f, g));
}

PLMap power(const PLMap &f, int64_t n) {
    PLMap base = n < 0 ? inverse(f) : f;
    uint64_t e = n < 0 ? static_cast<uint64_t>(-(n + 1)) + 1 : static_cast<uint64_t>(n);
    PLMap result = PLMap::identity(f.carrier());
    while (e > 0) {
        if (e & 1) {
            result = compose(result, base);
        }
        e >>= 1;
        if (e > 0) {
            base = compose(base, base);
        }
    }
    return result;
}

PLMap product(const std::vector<PLMap> &factors) {
    if (factors.empty()) {
        return PLMap::identity();
    }
    PLMap result = factors.front();
    for (size_t i = 1; i < factors.size(); i++) {
        result = compose(result, factors[i]);
    }
    return result;
}

int64_t one_sided_slope(const PLMap &f, const Dyadic &x, Side side) {
    const PLFragment &lift = f.lift();
    Dyadic p = x;
    if (f.carrier() == Carrier::Interval) {
        if (x < Dyadic(0) || x > Dyadic(1)) {
            throw PreconditionError("point " + x.str() + " outside [0, 1]");
        }
        if ((x == Dyadic(0) && side == Side::Left) || (x == Dyadic(1) && side == Side::Right)) {
            throw PreconditionError("one-sided slope outside the interval at " + x.str());
        }
    } else {
        p = x.frac();
        if (p.sign() == 0 && side == Side::Left) {
            p = Dyadic(1);
        }
    }
    const auto &xs = lift.xs();
    if (side == Side::Right) {
        size_t i = std::upper_bound(xs.begin(), xs.end(), p) - xs.begin() - 1;
        return lift.log2_slope(i);
    }
    size_t i = std::lower_bound(xs.begin(), xs.end(), p) - xs.begin() - 1;
    return lift.log2_slope(i);
}

PLMap rotation(const Dyadic &a) { return PLMap::from_points(Carrier::Circle, {{Dyadic(0), a.frac()}}); }

PLMap restrict_patch(Carrier carrier, std::vector<PLFragment> fragments) {
    if (fragments.empty()) {
        throw PreconditionError("restrict_patch: no fragments");
    }
    std::sort(fragments.begin(), fragments.end(), [](const PLFragment &a, const PLFragment &b) {
        return a.domain_lo().frac() < b.domain_lo().frac();
    });
    Dyadic total_domain(0), total_image(0);
    for (const auto &frag : fragments) {
        total_domain += frag.domain_hi() - frag.domain_lo();
        total_image += frag.image_hi() - frag.image_lo();
    }
    if (total_domain != Dyadic(1)) {
        throw PreconditionError("restrict_patch: fragment domains have total length " + total_domain.str() +
                                ", expected 1");
    }
    if (total_image != Dyadic(1)) {
        throw PreconditionError("restrict_patch: fragment images have total length " + total_image.str() +
                                ", expected 1");
    }
    std::vector<Dyadic> xs = fragments[0].xs();
    std::vector<Dyadic> ys = fragments[0].ys();
    for (size_t i = 1; i < fragments.size(); i++) {
        const PLFragment &next = fragments[i];
        Dyadic dx = xs.back() - next.domain_lo();
        Dyadic dy = ys.back() - next.image_lo();
        if (!dx.is_integer()) {
            throw PreconditionError("restrict_patch: gap or overlap in domains at " + next.domain_lo().str());
        }
        if (!dy.is_integer()) {
            throw PreconditionError("restrict_patch: fragment images disagree at " + next.domain_lo().str() +
                                    " (" + ys.back().frac().str() + " vs " + next.image_lo().frac().str() + ")");
        }
        PLFragment moved = next.translated(dx, dy);
        xs.insert(xs.end(), moved.xs().begin() + 1, moved.xs().end());
        ys.insert(ys.end(), moved.ys().begin() + 1, moved.ys().end());
    }
    if ((ys.back() - ys.front()) != Dyadic(1) || !(xs.back() - xs.front()).is_integer()) {
        throw PreconditionError("restrict_patch: fragments do not close up around the carrier");
    }
    return PLMap::from_period(carrier, PLFragment(std::move(xs), std::move(ys)));
}

std::vector<Dyadic> standard_decomposition(const Dyadic &p, const Dyadic &q) {
    if (p >= q) {
        throw PreconditionError("degenerate interval [" + p.str() + ", " + q.str() + "]");
    }
    std::vector<Dyadic> points{p};
    Dyadic x = p;
    while (x < q) {
        int64_t e = floor_log2(q - x);
        if (x.sign() != 0) {
            e = std::min(e, valuation(x));
        }
        x = x + Dyadic::pow2(e);
        points.push_back(x);
    }
    return points;
}

PLFragment thompson_like_map(const Dyadic &p, const Dyadic &q, const Dyadic &r, const Dyadic &s) {
    if (p >= q || r >= s) {
        throw PreconditionError("thompson_like_map: degenerate interval");
    }
    std::vector<Dyadic> src = standard_decomposition(p, q);
    std::vector<Dyadic> dst = standard_decomposition(r, s);
    auto split_largest = [](std::vector<Dyadic> &pts) {
        size_t best = 0;
        Dyadic best_len(0);
        for (size_t i = 0; i + 1 < pts.size(); i++) {
            Dyadic len = pts[i + 1] - pts[i];
            if (len > best_len) {
                best_len = len;
                best = i;
            }
        }
        pts.insert(pts.begin() + static_cast<std::ptrdiff_t>(best) + 1, pts[best] + best_len.mul_pow2(-1));
    };
    while (src.size() != dst.size()) {
        split_largest(src.size() < dst.size() ? src : dst);
    }
    return PLFragment(std::move(src), std::move(dst));
}

PLFragment thompson_like_map(const CirclePoint &p, const CirclePoint &q, const CirclePoint &r,
                             const CirclePoint &s) {
    return thompson_like_map(p.pos(), p.pos() + p.arc_length_to(q), r.pos(), r.pos() + r.arc_length_to(s));
}

PLFragment join(const PLFragment &a, const PLFragment &b) {
    if (a.domain_hi() != b.domain_lo() || a.image_hi() != b.image_lo()) {
        throw PreconditionError("join: fragments " + a.str() + " and " + b.str() + " do not meet");
    }
    std::vector<Dyadic> xs = a.xs();
    std::vector<Dyadic> ys = a.ys();
    xs.insert(xs.end(), b.xs().begin() + 1, b.xs().end());
    ys.insert(ys.end(), b.ys().begin() + 1, b.ys().end());
    return PLFragment(std::move(xs), std::move(ys));
}

PLMap transport(const PLMap &g, const PLFragment &tau) {
    PLFragment inner = g.restrict(tau.domain_lo(), tau.domain_hi());
    Dyadic drift = inner.image_lo() - tau.domain_lo();
    if (!drift.is_integer() || inner.image_hi() - inner.domain_hi() != drift) {
        throw PreconditionError("transport: map does not preserve [" + tau.domain_lo().str() + ", " +
                                tau.domain_hi().str() + "]");
    }
    PLFragment moved = tau.inverse().then(inner).then(tau);
    Dyadic lo = tau.image_lo();
    Dyadic hi = tau.image_hi();
    Dyadic base = lo.frac();
    Carrier carrier = (hi - lo + base) <= Dyadic(1) ? Carrier::Interval : Carrier::Circle;
    if (g.carrier() == Carrier::Circle) {
        carrier = Carrier::Circle;
    }
    std::vector<PLFragment> parts{moved};
    if (hi - lo < Dyadic(1)) {
        parts.push_back(PLFragment::identity(hi, lo + Dyadic(1)));
    }
    return restrict_patch(carrier, std::move(parts));
}

// ---------------------------------------------------------------------------
// Arcs, fixed points, support

OpenArc OpenArc::make(const Rational &from, const Rational &to) {
    Rational lo = rational_frac(from);
    Rational len = circ_offset(from, to);
    if (len == 0) {
        len = 1;
    }
    return OpenArc{lo, lo + len};
}

bool OpenArc::contains(const Rational &x) const {
    Rational off = circ_offset(lo, x);
    return off > 0 && off < length();
}

bool OpenArc::contains(const OpenArc &other) const {
    Rational off = circ_offset(lo, other.lo);
    return off + other.length() <= length();
}

bool OpenArc::intersects(const OpenArc &other) const {
    return lo == other.lo || contains(other.lo) || other.contains(lo);
}

namespace {

std::string rational_str(const Rational &x) { return x.get_str(); }

// Renders an arc endpoint: values above 1 are shown mod 1, 1 itself stays 1.
std::string endpoint_str(const Rational &x) { return x > 1 ? rational_str(rational_frac(x)) : rational_str(x); }

}  // namespace

std::string OpenArc::str() const { return "(" + endpoint_str(lo) + ", " + endpoint_str(hi) + ")"; }

ArcUnion make_full_circle() {
    ArcUnion u;
    u.full_ = true;
    return u;
}

ArcUnion::ArcUnion(const std::vector<OpenArc> &arcs) : arcs_(arcs) {
    bool changed = true;
    while (changed && !full_) {
        changed = false;
        for (size_t i = 0; i < arcs_.size() && !changed; i++) {
            for (size_t j = 0; j < arcs_.size() && !changed; j++) {
                if (i == j || !arcs_[i].intersects(arcs_[j])) {
                    continue;
                }
                const OpenArc &a = arcs_[i];
                const OpenArc &b = arcs_[j];
                if (!(a.lo == b.lo || a.contains(b.lo))) {
                    continue;  // handled when the roles are swapped
                }
                Rational end = std::max<Rational>(a.length(), circ_offset(a.lo, b.lo) + b.length());
                if (end > 1) {
                    full_ = true;
                    arcs_.clear();
                    return;
                }
                OpenArc merged{a.lo, a.lo + end};
                arcs_.erase(arcs_.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
                arcs_.erase(arcs_.begin() + static_cast<std::ptrdiff_t>(std::min(i, j)));
                arcs_.push_back(merged);
                changed = true;
            }
        }
    }
    std::sort(arcs_.begin(), arcs_.end(), [](const OpenArc &a, const OpenArc &b) { return a.lo < b.lo; });
}

bool ArcUnion::contains(const Rational &x) const {
    if (full_) {
        return true;
    }
    return std::any_of(arcs_.begin(), arcs_.end(), [&](const OpenArc &a) { return a.contains(x); });
}

bool ArcUnion::contains(const ArcUnion &other) const {
    if (full_) {
        return true;
    }
    if (other.full_) {
        return false;
    }
    for (const OpenArc &arc : other.arcs_) {
        if (!std::any_of(arcs_.begin(), arcs_.end(), [&](const OpenArc &a) { return a.contains(arc); })) {
            return false;
        }
    }
    return true;
}

std::string ArcUnion::str() const {
    if (full_) {
        return "S1";
    }
    if (arcs_.empty()) {
        return "{}";
    }
    std::string out = "{";
    for (size_t i = 0; i < arcs_.size(); i++) {
        out += (i ? ", " : "") + arcs_[i].str();
    }
    return out + "}";
}

bool FixedSet::contains(const Rational &x) const {
    if (everything) {
        return true;
    }
    auto in_some = [&](const Rational &p) {
        for (const auto &c : components) {
            bool hit = c.lo <= c.hi ? (p >= c.lo && p <= c.hi) : (p >= c.lo || p <= c.hi);
            if (hit) {
                return true;
            }
        }
        return false;
    };
    Rational p = x == 1 ? Rational(1) : rational_frac(x);
    // 1 and 0 name the same point; an Interval component may use either.
    return in_some(p) || (p == 1 && in_some(0)) || (p == 0 && in_some(1));
}

std::string FixedSet::str() const {
    if (everything) {
        return "everything";
    }
    if (components.empty()) {
        return "{}";
    }
    std::string out;
    for (size_t i = 0; i < components.size(); i++) {
        const auto &c = components[i];
        out += i ? " u " : "";
        if (c.lo == c.hi) {
            out += "{" + rational_str(c.lo) + "}";
        } else {
            out += "[" + rational_str(c.lo) + ", " + rational_str(c.hi) + "]";
        }
    }
    return out;
}

namespace {

// Closed pieces of {x in [0, 1] : F(x) - x is an integer}, merged and sorted.
std::vector<FixedComponent> fixed_pieces_of_lift(const PLFragment &lift) {
    std::vector<FixedComponent> pieces;
    for (size_t i = 0; i < lift.piece_count(); i++) {
        const Dyadic &x0 = lift.xs()[i];
        const Dyadic &x1 = lift.xs()[i + 1];
        Dyadic d0 = lift.ys()[i] - x0;
        Dyadic d1 = lift.ys()[i + 1] - x1;
        int64_t k = lift.log2_slope(i);
        if (k == 0) {
            if (d0.is_integer()) {
                pieces.push_back({x0.to_rational(), x1.to_rational()});
            }
            continue;
        }
        Rational lo_d = std::min(d0, d1).to_rational();
        Rational hi_d = std::max(d0, d1).to_rational();
        mpz_class m;
        mpz_cdiv_q(m.get_mpz_t(), lo_d.get_num_mpz_t(), lo_d.get_den_mpz_t());
        Rational slope_minus_one = Dyadic::pow2(k).to_rational() - 1;
        for (; Rational(m) <= hi_d; ++m) {
            // d(x) = d0 + (s - 1)(x - x0)
            Rational x = x0.to_rational() + (Rational(m) - d0.to_rational()) / slope_minus_one;
            x.canonicalize();
            pieces.push_back({x, x});
        }
    }
    std::sort(pieces.begin(), pieces.end(), [](const FixedComponent &a, const FixedComponent &b) {
        return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi);
    });
    std::vector<FixedComponent> merged;
    for (const auto &p : pieces) {
        if (!merged.empty() && p.lo <= merged.back().hi) {
            merged.back().hi = std::max(merged.back().hi, p.hi);
        } else {
            merged.push_back(p);
        }
    }
    return merged;
}

}  // namespace

FixedSet fixed_points(const PLMap &f) {
    FixedSet out;
    std::vector<FixedComponent> pieces = fixed_pieces_of_lift(f.lift());
    if (pieces.size() == 1 && pieces[0].lo == 0 && pieces[0].hi == 1) {
        out.everything = true;
        return out;
    }
    if (f.carrier() == Carrier::Circle && pieces.size() >= 2 && pieces.front().lo == 0 && pieces.back().hi == 1) {
        // 0 and 1 are the same point of the circle.
        FixedComponent head = pieces.front();
        FixedComponent tail = pieces.back();
        pieces.erase(pieces.begin());
        pieces.pop_back();
        FixedComponent joined{rational_frac(tail.lo), head.hi};
        pieces.insert(pieces.begin(), joined);
        std::sort(pieces.begin(), pieces.end(),
                  [](const FixedComponent &a, const FixedComponent &b) { return a.lo < b.lo; });
    }
    out.components = std::move(pieces);
    return out;
}

SupportSet support(const PLMap &f) {
    FixedSet fixed = fixed_points(f);
    if (fixed.everything) {
        return ArcUnion();
    }
    if (fixed.components.empty()) {
        return make_full_circle();
    }
    std::vector<OpenArc> arcs;
    const auto &c = fixed.components;
    if (f.carrier() == Carrier::Interval) {
        for (size_t i = 0; i + 1 < c.size(); i++) {
            if (c[i].hi < c[i + 1].lo) {
                arcs.push_back(OpenArc{c[i].hi, c[i + 1].lo});
            }
        }
        return ArcUnion(arcs);
    }
    for (size_t i = 0; i < c.size(); i++) {
        const FixedComponent &next = c[(i + 1) % c.size()];
        Rational end = rational_frac(c[i].hi);
        Rational gap = circ_offset(end, next.lo);
        if (c.size() == 1 && gap == 0) {
            gap = 1;
        }
        if (gap > 0) {
            arcs.push_back(OpenArc{end, end + gap});
        }
    }
    return ArcUnion(arcs);
}

std::ostream &operator<<(std::ostream &out, const PLMap &f) {
    return out << carrier_name(f.carrier()) << " " << f.lift().str();
}

ArcUnion intersect(const ArcUnion &a, const ArcUnion &b) {
    if (a.is_full_circle()) {
        return b;
    }
    if (b.is_full_circle()) {
        return a;
    }
    std::vector<OpenArc> pieces;
    for (const OpenArc &x : a.arcs()) {
        for (const OpenArc &y : b.arcs()) {
            Rational start = x.lo + circ_offset(x.lo, y.lo);
            for (const Rational &shift : {Rational(0), Rational(-1)}) {
                Rational lo = std::max<Rational>(x.lo, start + shift);
                Rational hi = std::min<Rational>(x.hi, start + shift + y.length());
                if (lo < hi) {
                    pieces.push_back(OpenArc::make(lo, hi));
                }
            }
        }
    }
    return ArcUnion(pieces);
}

namespace {

// Lifted fragments over the same lifted domain differ by a constant integer.
bool same_up_to_lift(const PLFragment &a, const PLFragment &b) {
    if (a.xs() != b.xs()) {
        return false;
    }
    Dyadic shift = b.image_lo() - a.image_lo();
    if (!shift.is_integer()) {
        return false;
    }
    for (size_t i = 0; i < a.ys().size(); i++) {
        if (b.ys()[i] - a.ys()[i] != shift) {
            return false;
        }
    }
    return true;
}

}  // namespace

bool agree_on_arc(const PLMap &f, const PLMap &g, const CirclePoint &from, const CirclePoint &to) {
    return same_up_to_lift(f.as_circle().restrict_arc(from, to), g.as_circle().restrict_arc(from, to));
}

bool acts_trivially_on_arc(const PLMap &f, const CirclePoint &from, const CirclePoint &to) {
    PLFragment frag = f.as_circle().restrict_arc(from, to);
    return same_up_to_lift(frag, PLFragment::identity(frag.domain_lo(), frag.domain_hi()));
}

}  // namespace thompson
