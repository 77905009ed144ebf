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

#include "thompson/groupcalc.hpp"

#include <algorithm>
#include <numeric>

namespace thompson {

namespace standard {

PLMap x0() { return to_plmap(parse_element("(00,01,1) -> (0,10,11)")); }

PLMap x1() { return to_plmap(parse_element("(0,100,101,11) -> (0,10,110,111)")); }

PLMap x(int n) {
    if (n < 0) {
        throw PreconditionError("x_n needs n >= 0");
    }
    if (n == 0) {
        return x0();
    }
    PLMap result = x1();
    PLMap g = x0();
    for (int i = 1; i < n; i++) {
        result = conjugate(result, g);
    }
    return result;
}

PLMap zeta() { return to_plmap(parse_element("(00,01,10,11) -> (0,100,101,11)")); }

TreePair torsion_rep_pair(int n) {
    if (n < 2) {
        throw PreconditionError("torsion representative needs n >= 2");
    }
    std::vector<BinaryWord> leaves;
    if (n == 2) {
        leaves = {BinaryWord("0"), BinaryWord("1")};
    } else if (n == 3) {
        leaves = {BinaryWord("0"), BinaryWord("10"), BinaryWord("11")};
    } else {
        leaves = {BinaryWord("00"), BinaryWord("01")};
        for (int i = 1; i <= n - 3; i++) {
            leaves.emplace_back(std::string(static_cast<size_t>(i), '1') + "0");
        }
        leaves.emplace_back(std::string(static_cast<size_t>(n - 2), '1'));
    }
    Tree t(leaves);
    return TreePair(t, t, 1);
}

PLMap torsion_rep(int n) { return to_plmap(torsion_rep_pair(n)); }

}  // namespace standard

GroupSpec GroupSpec::f_box(const Dyadic &lo, const Dyadic &hi) {
    if (!(Dyadic(0) <= lo && lo < hi && hi <= Dyadic(1))) {
        throw PreconditionError("F box needs 0 <= lo < hi <= 1");
    }
    return {Kind::FBox, lo, hi};
}

GroupSpec GroupSpec::t_box(const CirclePoint &lo, const CirclePoint &hi) {
    return {Kind::TBox, lo.pos(), lo.pos() + lo.arc_length_to(hi)};
}

bool is_member(const PLMap &f, const GroupSpec &group) {
    switch (group.kind) {
        case GroupSpec::Kind::T:
            return true;
        case GroupSpec::Kind::F:
            return f.fixes_zero();
        case GroupSpec::Kind::FBox:
            if (!f.fixes_zero()) {
                return false;
            }
            [[fallthrough]];
        case GroupSpec::Kind::TBox: {
            SupportSet supp = support(f);
            if (supp.empty()) {
                return true;
            }
            if (supp.is_full_circle()) {
                return false;
            }
            ArcUnion box({OpenArc{group.lo.to_rational(), group.hi.to_rational()}});
            return box.contains(supp);
        }
    }
    return false;
}

std::string OrderResult::str() const {
    switch (kind) {
        case Kind::Finite:
            return std::to_string(value);
        case Kind::Infinite:
            return "infinite";
        case Kind::Unknown:
            return "unknown(" + std::to_string(value) + ")";
    }
    return "";
}

OrderResult order_of(const PLMap &f, int64_t bound) {
    if (f.is_identity()) {
        return {OrderResult::Kind::Finite, 1};
    }
    if (!fixed_points(f).empty()) {
        return {OrderResult::Kind::Infinite, 0};
    }
    const CirclePoint start(0L);
    CirclePoint p = f.eval(start);
    for (int64_t m = 1; m <= bound; m++) {
        if (p == start) {
            if (power(f, m).is_identity()) {
                return {OrderResult::Kind::Finite, m};
            }
            return {OrderResult::Kind::Infinite, 0};
        }
        p = f.eval(p);
    }
    return {OrderResult::Kind::Unknown, bound};
}

std::optional<Fraction> rotation_number(const PLMap &f, int64_t bound) {
    if (f.is_identity()) {
        return Fraction{0, 1};
    }
    if (!fixed_points(f).empty()) {
        return Fraction{0, 1};
    }
    OrderResult order = order_of(f, bound);
    if (order.kind != OrderResult::Kind::Finite) {
        return std::nullopt;
    }
    std::vector<Dyadic> bps = f.breakpoints();
    CirclePoint seed = bps.empty() ? CirclePoint(0L) : CirclePoint(bps.front());
    std::vector<Dyadic> offsets;
    CirclePoint p = seed;
    for (int64_t i = 0; i < order.value; i++) {
        offsets.push_back(i == 0 ? Dyadic(0) : seed.arc_length_to(p));
        p = f.eval(p);
    }
    Dyadic image_offset = offsets[1 % offsets.size()];
    std::sort(offsets.begin(), offsets.end());
    int64_t k = std::lower_bound(offsets.begin(), offsets.end(), image_offset) - offsets.begin();
    int64_t n = order.value;
    int64_t g = std::gcd(k, n);
    return Fraction{k / g, n / g};
}

HopResult admits_hops(const PLMap &f, const CirclePoint &p, int k) {
    if (k < 1) {
        throw PreconditionError("hop count must be positive");
    }
    if (f.eval(p) == p) {
        throw PreconditionError("point " + p.str() + " is fixed");
    }
    std::vector<CirclePoint> orbit{p};
    for (int i = 0; i < k; i++) {
        orbit.push_back(f.eval(orbit.back()));
    }
    std::vector<OpenArc> arcs;
    for (int i = 0; i < k; i++) {
        arcs.push_back(OpenArc::make(orbit[static_cast<size_t>(i)], orbit[static_cast<size_t>(i) + 1]));
    }
    HopResult result;
    for (int i = 0; i < k; i++) {
        for (int j = i + 1; j < k; j++) {
            if (arcs[static_cast<size_t>(i)].intersects(arcs[static_cast<size_t>(j)])) {
                result.first = i;
                result.second = j;
                return result;
            }
        }
    }
    result.certificate = HopCertificate{p, k, std::move(orbit)};
    return result;
}

PLMap Factorisation::product() const { return beta_first ? compose(beta, alpha) : compose(alpha, beta); }

namespace {

// gamma = alpha beta when b gamma^-1 <= b.
std::pair<PLMap, PLMap> factor_direct(const PLMap &gamma, const Dyadic &a, const Dyadic &b, const Dyadic &c) {
    Dyadic e = gamma.as_circle().eval_inverse_lift(b);
    std::vector<PLFragment> parts;
    if (a > Dyadic(0)) {
        parts.push_back(PLFragment::identity(0, a));
    }
    parts.push_back(gamma.restrict(a, e));
    parts.push_back(thompson_like_map(e, c, b, c));
    if (c < Dyadic(1)) {
        parts.push_back(PLFragment::identity(c, 1));
    }
    PLMap alpha = restrict_patch(Carrier::Interval, std::move(parts));
    PLMap beta = compose(inverse(alpha), gamma);
    return {alpha, beta};
}

}  // namespace

Factorisation factor_over_cover(const PLMap &gamma, const Dyadic &a, const Dyadic &b, const Dyadic &c,
                                const Dyadic &d) {
    if (!(Dyadic(0) <= a && a < b && b < c && c < d && d <= Dyadic(1))) {
        throw PreconditionError("factor_over_cover needs 0 <= a < b < c < d <= 1");
    }
    if (!is_member(gamma, GroupSpec::f_box(a, d))) {
        throw PreconditionError("element is not supported in [" + a.str() + ", " + d.str() + "]");
    }
    Factorisation out{PLMap::identity(), PLMap::identity(), false};
    if (gamma.eval_inverse_lift(b) <= b) {
        auto [alpha, beta] = factor_direct(gamma, a, b, c);
        out.alpha = alpha;
        out.beta = beta;
    } else {
        auto [alpha, beta] = factor_direct(inverse(gamma), a, b, c);
        out.alpha = inverse(alpha);
        out.beta = inverse(beta);
        out.beta_first = true;
    }
    if (!is_member(out.alpha, GroupSpec::f_box(a, c)) || !is_member(out.beta, GroupSpec::f_box(b, d)) ||
        out.product() != gamma) {
        throw Error("factor_over_cover: internal consistency check failed");
    }
    return out;
}

PLFragment box_conjugator(const CirclePoint &lo, const CirclePoint &hi, const std::optional<CirclePoint> &mid) {
    Dyadic from = lo.pos();
    Dyadic to = from + lo.arc_length_to(hi);
    if (!mid) {
        return thompson_like_map(Dyadic(0), Dyadic(1), from, to);
    }
    Dyadic m = from + lo.arc_length_to(*mid);
    if (!(from < m && m < to)) {
        throw PreconditionError("midpoint " + mid->str() + " is not inside the arc");
    }
    Dyadic half(1, 1);
    return join(thompson_like_map(Dyadic(0), half, from, m), thompson_like_map(half, Dyadic(1), m, to));
}

std::vector<PLMap> box_generators(const CirclePoint &lo, const CirclePoint &hi, const std::vector<PLMap> &base,
                                  const std::optional<CirclePoint> &mid) {
    PLFragment tau = box_conjugator(lo, hi, mid);
    std::vector<PLMap> out;
    out.reserve(base.size());
    for (const PLMap &g : base) {
        if (!g.fixes_zero()) {
            throw PreconditionError("box generators must come from F");
        }
        out.push_back(transport(g, tau));
    }
    return out;
}

uint64_t draw(std::mt19937_64 &rng, uint64_t n) { return rng() % n; }

namespace {

Tree random_tree(std::mt19937_64 &rng, int leaves) {
    std::vector<BinaryWord> words{BinaryWord()};
    while (static_cast<int>(words.size()) < leaves) {
        size_t i = draw(rng, words.size());
        BinaryWord w = words[i];
        words[i] = w.child(0);
        words.push_back(w.child(1));
    }
    return Tree(std::move(words));
}

}  // namespace

TreePair random_tree_pair(std::mt19937_64 &rng, int leaves, Carrier carrier) {
    if (leaves < 1) {
        throw PreconditionError("random tree pair needs at least one leaf");
    }
    Tree domain = random_tree(rng, leaves);
    Tree range = random_tree(rng, leaves);
    size_t offset = carrier == Carrier::Circle ? draw(rng, static_cast<uint64_t>(leaves)) : 0;
    return reduce(TreePair(domain, range, offset));
}

PLMap random_element(std::mt19937_64 &rng, int leaves, Carrier carrier) {
    PLMap f = to_plmap(random_tree_pair(rng, leaves, carrier));
    return carrier == Carrier::Circle ? f.as_circle() : f;
}

}  // namespace thompson
