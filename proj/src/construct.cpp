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

#include "thompson/construct.hpp"

#include <algorithm>

namespace thompson {

namespace {

// Lifted orbit p, p f, ..., p f^n, each step taken counterclockwise.
std::vector<Dyadic> lifted_orbit(const PLMap &f, const CirclePoint &p, int n) {
    std::vector<Dyadic> out{p.pos()};
    CirclePoint cur = p;
    for (int i = 0; i < n; i++) {
        CirclePoint next = f.eval(cur);
        out.push_back(out.back() + cur.arc_length_to(next));
        cur = next;
    }
    return out;
}

Rational rat(const CirclePoint &p) { return p.pos().to_rational(); }

// Circular order of rational points, all distinct.
bool rational_chain(const std::vector<Rational> &pts) {
    Rational prev = 0;
    for (size_t i = 1; i < pts.size(); i++) {
        Rational off = circ_offset(pts[0], pts[i]);
        if (off <= prev) {
            return false;
        }
        prev = off;
    }
    return true;
}

// n dyadic points spread over the open arc (lo, hi), rounded down to 2^-48.
std::vector<CirclePoint> sample_arc(const Rational &lo, const Rational &hi, int n) {
    std::vector<CirclePoint> out;
    Rational len = circ_offset(lo, hi);
    if (len == 0) {
        len = 1;
    }
    OpenArc arc = OpenArc::make(lo, hi);
    const uint32_t bits = 48;
    for (int j = 1; j <= n; j++) {
        Rational x = rational_frac(lo + len * Rational(j, n + 1));
        mpz_class scaled = x.get_num() * (mpz_class(1) << bits) / x.get_den();
        Dyadic y(scaled, bits);
        if (arc.contains(y.to_rational())) {
            out.emplace_back(y);
        }
    }
    return out;
}

bool arc_contains(const Rational &lo, const Rational &hi, const CirclePoint &x) {
    return OpenArc::make(lo, hi).contains(rat(x));
}

}  // namespace

bool all_pass(const std::vector<Check> &checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check &c) { return c.pass; });
}

ConjugatorCheck check_conjugator(const ConjugatorSpec &spec, const PLMap &gamma) {
    std::vector<Dyadic> qs = lifted_orbit(spec.nu, spec.q, spec.k + 1);
    PLMap conj = conjugate(spec.mu, gamma);
    ConjugatorCheck out;
    out.restriction = agree_on_arc(conj, spec.nu, spec.q, CirclePoint(qs[static_cast<size_t>(spec.k)]));
    out.chain = circ_chain({CirclePoint(qs.back()), spec.r, spec.s, conj.eval(spec.r), conj.eval(spec.s), spec.q});
    return out;
}

PLMap construct_conjugator(const ConjugatorSpec &spec) {
    const int k = spec.k;
    if (k < 1) {
        throw PreconditionError("conjugator needs k >= 1");
    }
    if (spec.mu.eval(spec.p) == spec.p || !admits_hops(spec.mu, spec.p, k + 3)) {
        throw PreconditionError("mu does not admit " + std::to_string(k + 3) + " hops at " + spec.p.str());
    }
    if (spec.nu.eval(spec.q) == spec.q || !admits_hops(spec.nu, spec.q, k + 3)) {
        throw PreconditionError("nu does not admit " + std::to_string(k + 3) + " hops at " + spec.q.str());
    }
    std::vector<Dyadic> ps = lifted_orbit(spec.mu, spec.p, k + 3);
    std::vector<Dyadic> qs = lifted_orbit(spec.nu, spec.q, k + 1);
    const CirclePoint q_end(qs.back());
    if (!circ_chain({q_end, spec.r, spec.s, spec.q})) {
        throw PreconditionError("[" + spec.r.str() + ", " + spec.s.str() + "] is not inside the arc (" +
                                q_end.str() + ", " + spec.q.str() + ")");
    }
    const PLMap mu_inv = inverse(spec.mu);
    std::vector<PLFragment> pieces;
    pieces.push_back(thompson_like_map(ps[0], ps[1], qs[0], qs[1]));
    for (int i = 1; i <= k; i++) {
        size_t at = static_cast<size_t>(i);
        PLFragment step = mu_inv.restrict(ps[at], ps[at + 1])
                              .then(pieces.back())
                              .then(spec.nu.restrict(qs[at - 1], qs[at]));
        pieces.push_back(step);
    }
    const Dyadic half(1, 1), three_quarters(3, 2);
    size_t kk = static_cast<size_t>(k);
    CirclePoint p_k1(ps[kk + 1]), p_k2(ps[kk + 2]);
    CirclePoint m1 = circ_interp(p_k1, p_k2, half);
    CirclePoint m2 = circ_interp(p_k1, p_k2, three_quarters);
    CirclePoint m1_mu = spec.mu.eval(m1), m2_mu = spec.mu.eval(m2);
    CirclePoint n1 = circ_interp(spec.s, spec.q, half);
    CirclePoint n2 = circ_interp(spec.s, spec.q, three_quarters);
    pieces.push_back(thompson_like_map(p_k1, m1, q_end, spec.r));
    pieces.push_back(thompson_like_map(m1, m2, spec.r, spec.s));
    pieces.push_back(thompson_like_map(m2, m1_mu, spec.s, n1));
    pieces.push_back(thompson_like_map(m1_mu, m2_mu, n1, n2));
    pieces.push_back(thompson_like_map(m2_mu, spec.p, n2, spec.q));
    PLMap gamma = restrict_patch(Carrier::Circle, std::move(pieces));
    ConjugatorCheck check = check_conjugator(spec, gamma);
    if (!check.ok()) {
        throw Error(std::string("conjugator postcondition failed: ") +
                    (check.restriction ? "circular chain" : "restriction equality"));
    }
    return gamma;
}

std::optional<PowerSearchResult> power_search(const PLMap &alpha, int64_t bound) {
    PLMap cur = alpha;
    for (int64_t n = 1; n <= bound; n++) {
        if (!fixed_points(cur).empty()) {
            return PowerSearchResult{n, cur};
        }
        cur = compose(cur, alpha);
    }
    return std::nullopt;
}

namespace {

struct Base {
    PLMap alpha;
    bool inverted;
    CirclePoint a;
    OpenArc component;
};

// The support component of f containing x, if any.
std::optional<OpenArc> component_of(const PLMap &f, const CirclePoint &x) {
    const SupportSet supp = support(f);
    for (const OpenArc &arc : supp.arcs()) {
        if (arc.contains(rat(x))) {
            return arc;
        }
    }
    return std::nullopt;
}

bool moves_forward(const PLMap &f, const CirclePoint &x, const OpenArc &component) {
    return OpenArc::make(rat(x), component.hi).contains(rat(f.eval(x)));
}

std::optional<Base> choose_base(const PLMap &alpha, const std::optional<CirclePoint> &given) {
    if (given) {
        auto comp = component_of(alpha, *given);
        if (!comp) {
            throw PreconditionError("base point " + given->str() + " is fixed by alpha");
        }
        if (moves_forward(alpha, *given, *comp)) {
            return Base{alpha, false, *given, *comp};
        }
        return Base{inverse(alpha), true, *given, *comp};
    }
    for (bool inverted : {false, true}) {
        PLMap f = inverted ? inverse(alpha) : alpha;
        for (const Dyadic &x : f.breakpoints()) {
            auto comp = component_of(f, CirclePoint(x));
            if (comp && moves_forward(f, CirclePoint(x), *comp)) {
                return Base{f, inverted, CirclePoint(x), *comp};
            }
        }
    }
    return std::nullopt;
}

std::optional<CirclePoint> choose_zeta_base(const PLMap &zeta) {
    for (const Dyadic &x : zeta.breakpoints()) {
        CirclePoint p(x);
        if (zeta.eval(p) != p && admits_hops(zeta, p, kPipelineHops)) {
            return p;
        }
    }
    return std::nullopt;
}

struct Recorder {
    std::vector<Check> &checks;
    void operator()(std::string name, bool pass, std::string detail = "") {
        checks.push_back(Check{std::move(name), pass, std::move(detail)});
    }
};

}  // namespace

PipelineState prop_infinite_pipeline(const PLMap &alpha_in, const PLMap &zeta_in, const std::optional<CirclePoint> &a,
                                     const std::optional<CirclePoint> &zeta_base) {
    const PLMap alpha_c = alpha_in.as_circle();
    const PLMap zeta = zeta_in.as_circle();
    if (order_of(alpha_c).kind == OrderResult::Kind::Finite) {
        throw PreconditionError("alpha has finite order");
    }
    if (order_of(zeta).kind == OrderResult::Kind::Finite) {
        throw PreconditionError("zeta has finite order");
    }
    if (fixed_points(alpha_c).empty()) {
        throw PreconditionError("alpha has no fixed point; replace it by a power found with power_search");
    }
    auto base = choose_base(alpha_c, a);
    if (!base) {
        throw PreconditionError("no base point for alpha in either orientation");
    }
    PipelineState st;
    Recorder check{st.checks};
    st.alpha = base->alpha;
    st.zeta = zeta;
    st.alpha_inverted = base->inverted;
    st.a = base->a;
    st.c = base->component.lo;
    st.d = base->component.hi;
    const PLMap &al = st.alpha;
    const PLMap al_inv = inverse(al);

    auto zb = zeta_base ? zeta_base : choose_zeta_base(zeta);
    if (!zb || zeta.eval(*zb) == *zb || !admits_hops(zeta, *zb, kPipelineHops)) {
        throw PreconditionError("zeta admits no " + std::to_string(kPipelineHops) + " hops at a chosen base point");
    }
    st.zeta_base = *zb;

    st.a_pts[0] = st.a;
    for (int i = 1; i <= 19; i++) {
        st.a_pts[i] = al.eval(st.a_pts[i - 1]);
    }
    for (int i = -1; i >= -10; i--) {
        st.a_pts[i] = al_inv.eval(st.a_pts[i + 1]);
    }
    auto A = [&](int i) { return st.a_pts.at(i); };
    check("alpha admits 18 hops at a", static_cast<bool>(admits_hops(al, st.a, kPipelineHops)));

    st.tau = box_conjugator(A(8), A(10), A(9));
    st.x0_tau = transport(standard::x0(), st.tau);
    st.x1_tau = transport(standard::x1(), st.tau);
    st.beta = product({al, conjugate(st.x0_tau, power(al, -2)), st.x1_tau});
    st.b_pts[0] = st.a;
    for (int i = 1; i <= 18; i++) {
        st.b_pts[i] = st.beta.eval(st.b_pts[i - 1]);
    }
    auto B = [&](int i) { return st.b_pts.at(i); };
    check("beta admits 18 hops at a", static_cast<bool>(admits_hops(st.beta, st.a, kPipelineHops)));
    check("beta = alpha off [a5, a9]", agree_on_arc(st.beta, al, A(9), A(5)));
    for (int i = 0; i <= 6; i++) {
        check("b" + std::to_string(i) + " = a" + std::to_string(i), B(i) == A(i));
    }
    for (int i = 7; i <= 17; i++) {
        std::string n = std::to_string(i);
        check("a" + n + " < b" + n + " < a" + std::to_string(i + 1), circ_chain({A(i), B(i), A(i + 1)}));
    }

    const Dyadic half(1, 1), three_quarters(3, 2);
    st.r = circ_interp(B(16), B(17), half);
    st.s = circ_interp(A(-1), A(0), three_quarters);
    ConjugatorSpec spec{zeta, st.beta, 15, st.zeta_base, st.a, st.r, st.s};
    st.gamma = construct_conjugator(spec);
    st.zeta_gamma = conjugate(zeta, st.gamma);
    const PLMap &zg = st.zeta_gamma;
    const PLMap zg_inv = inverse(zg);
    check("zeta^gamma = beta on [b0, b15]", agree_on_arc(zg, st.beta, B(0), B(15)));
    check("b16 < r < b17 < c < a-1 < s < r zeta^gamma < s zeta^gamma < a0",
          rational_chain({rat(B(16)), rat(st.r), rat(B(17)), st.c, rat(A(-1)), rat(st.s), rat(zg.eval(st.r)),
                          rat(zg.eval(st.s)), rat(A(0))}));

    // alpha pushes (b15, c) and pulls (c, a1) towards c.
    bool disp1 = true;
    for (const CirclePoint &y : sample_arc(rat(B(15)), st.c, 50)) {
        disp1 = disp1 && arc_contains(rat(B(16)), st.c, al.eval(y));
    }
    for (const CirclePoint &y : sample_arc(st.c, rat(A(1)), 50)) {
        disp1 = disp1 && arc_contains(st.c, rat(A(0)), al_inv.eval(y));
    }
    check("alpha moves (b15, a1) towards c on sampled points", disp1);

    // For i >= 0, b17 alpha^i zeta^gamma in (c, a0) and
    // a-1 alpha^-i (zeta^gamma)^-1 in (b15, r).
    bool disp2 = true;
    CirclePoint fwd = B(17), back = A(-1);
    for (int i = 0; i < 50; i++) {
        disp2 = disp2 && arc_contains(st.c, rat(A(0)), zg.eval(fwd));
        disp2 = disp2 && arc_contains(rat(B(15)), rat(st.r), zg_inv.eval(back));
        fwd = al.eval(fwd);
        back = al_inv.eval(back);
    }
    check("b17 alpha^i zeta^gamma in (c, a0) and a-1 alpha^-i zeta^-gamma in (b15, r), 0 <= i < 50", disp2);

    st.eta = compose(al_inv, zg);
    check("eta trivial on [a1, a6]", acts_trivially_on_arc(st.eta, A(1), A(6)));
    check("eta trivial on [a10, b16]", acts_trivially_on_arc(st.eta, A(10), B(16)));
    check("eta = x1^tau on [a8, a10]", agree_on_arc(st.eta, st.x1_tau, A(8), A(10)));

    const PLMap al2 = power(al, 2);
    st.mu0 = conjugate(conjugate(st.eta, al2), product({al2, zg, power(al, -3)}));
    st.mu1 = conjugate(st.eta, product({power(al, -4), zg_inv, power(al, 5)}));
    check("mu0 = x0^tau on [a8, a10]", agree_on_arc(st.mu0, st.x0_tau, A(8), A(10)));
    check("mu1 = x1^tau on [a8, a10]", agree_on_arc(st.mu1, st.x1_tau, A(8), A(10)));
    ArcUnion allowed0({OpenArc::make(rat(A(8)), rat(A(12))), OpenArc::make(st.c, rat(A(3)))});
    ArcUnion allowed1({OpenArc::make(rat(A(6)), rat(A(10))), OpenArc::make(rat(B(16)), st.c)});
    SupportSet supp0 = support(st.mu0), supp1 = support(st.mu1);
    check("supp mu0 in (a8, a12) u (c, a3)", allowed0.contains(supp0), supp0.str());
    check("supp mu1 in (a6, a10) u (b16, c)", allowed1.contains(supp1), supp1.str());
    ArcUnion middle({OpenArc::make(A(8), A(10))});
    ArcUnion overlap = intersect(supp0, supp1);
    check("supp mu0 n supp mu1 in (a8, a10)", middle.contains(overlap), overlap.str());

    st.cover_p = circ_interp(A(8), A(9), half);
    st.cover_q = circ_interp(al.eval(st.cover_p), A(10), half);
    check("a8 < p < a9 < p alpha < q < a10",
          circ_chain({A(8), st.cover_p, A(9), al.eval(st.cover_p), st.cover_q, A(10)}));
    for (int i = -10; i <= 9; i++) {
        st.cover.push_back(power(al, i));
        st.cover_names.push_back("alpha^" + std::to_string(i));
    }
    st.cover.push_back(compose(power(al, -10), zg_inv));
    st.cover_names.push_back("alpha^-10 (zeta^gamma)^-1");
    st.cover.push_back(compose(power(al, -9), zg_inv));
    st.cover_names.push_back("alpha^-9 (zeta^gamma)^-1");
    std::vector<OpenArc> arcs;
    for (const PLMap &delta : st.cover) {
        arcs.push_back(OpenArc::make(delta.eval(st.cover_p), delta.eval(st.cover_q)));
    }
    ArcUnion covered(arcs);
    check("22 translates of (p, q) cover the circle", covered.is_full_circle(), covered.str());
    return st;
}

PLFragment case_c_tau() { return PLFragment({0, Dyadic(3, 2), Dyadic(7, 3)}, {0, Dyadic(3, 2), 1}); }

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; d++) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

FiniteCase prop_finite_data(char tag, int p) {
    FiniteCase fc;
    fc.tag = tag;
    PLMap zeta = standard::zeta();
    fc.kappa0 = zeta;
    switch (tag) {
        case 'a': {
            fc.p = 2;
            fc.alpha = standard::torsion_rep(2);
            PLMap az = compose(fc.alpha, zeta);
            fc.kappa1 = conjugate(zeta, compose(az, az)).as_interval();
            break;
        }
        case 'b':
            fc.p = 3;
            fc.alpha = standard::torsion_rep(3);
            fc.kappa1 = conjugate(zeta, fc.alpha).as_interval();
            break;
        case 'c': {
            if (p < 5 || !is_prime(p)) {
                throw PreconditionError("case c needs a prime p >= 5, got " + std::to_string(p));
            }
            fc.p = p;
            fc.alpha = standard::torsion_rep(p);
            fc.kappa1 = conjugate(zeta, fc.alpha).as_interval();
            fc.tau = case_c_tau();
            fc.kappa0_tau = transport(fc.kappa0, *fc.tau).as_interval();
            fc.kappa1_tau = transport(fc.kappa1, *fc.tau).as_interval();
            break;
        }
        default:
            throw PreconditionError(std::string("unknown case '") + tag + "' (expected a, b or c)");
    }
    return fc;
}

}  // namespace thompson
