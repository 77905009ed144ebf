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

#include "thompson/repro.hpp"

#include <algorithm>
#include <functional>

#include "thompson/core2.hpp"
#include "thompson/golan.hpp"
#include "thompson/treepair.hpp"

namespace thompson {

namespace {

Dyadic dy(const char *text) { return Dyadic::parse(text); }

PLMap notation(const char *text) { return to_plmap(parse_element(text)); }

bool renders_as(const PLMap &f, const std::string &text) { return from_plmap(f).str() == text; }

struct Suite {
    std::vector<Check> checks;
    void add(std::string name, bool pass, std::string detail = "") {
        checks.push_back(Check{std::move(name), pass, std::move(detail)});
    }
    // Runs `body`, turning an exception into a failed check.
    void guard(const std::string &name, const std::function<void()> &body) {
        try {
            body();
        } catch (const std::exception &e) {
            add(name, false, e.what());
        }
    }
};

// Union of the open arcs (lo, hi) g^i for 0 <= i < n is the whole circle.
bool translates_cover(const PLMap &g, const CirclePoint &lo, const CirclePoint &hi, int n) {
    std::vector<OpenArc> arcs;
    PLMap cur = PLMap::identity(Carrier::Circle);
    for (int i = 0; i < n; i++) {
        arcs.push_back(OpenArc::make(cur.eval(lo), cur.eval(hi)));
        cur = compose(cur, g);
    }
    return ArcUnion(arcs).is_full_circle();
}

void generation_checks(Suite &s, const std::string &label, const PLMap &k0, const PLMap &k1, int depth) {
    CoreResult core = build_core(std::vector<PLMap>{k0, k1});
    s.add(label + ": core is the criterion graph", is_generation_graph(core.graph), to_dot(core.graph));
    GermVector g0 = germ_vector(k0), g1 = germ_vector(inverse(k1));
    s.add(label + ": mu = kappa0 has germs (2, 1)", g0 == GermVector{1, 0});
    s.add(label + ": nu = kappa1^-1 has germs (1, 2)", g1 == GermVector{0, 1});
    s.add(label + ": xi = kappa1 fixes 1/4 with slopes 1, 2", is_xi_point(k1, dy("1/4")));
    GenVerdict v = generates_F({k0, k1}, depth);
    s.add(label + ": generates F", v.verdict == GenVerdict::Kind::Yes, verdict_name(v.verdict));
}

Suite figures_suite() {
    Suite s;
    s.guard("zeta", [&] {
        PLMap zeta = notation("(00,01,10,11)->(0,100,101,11)");
        PLMap formula = PLMap::from_lift(Carrier::Interval, PLFragment({0, dy("1/4"), dy("3/4"), 1},
                                                                       {0, dy("1/2"), dy("3/4"), 1}));
        s.add("zeta: tree pair equals its three-piece formula", zeta == formula);
        s.add("zeta: formula renders back to the tree pair",
              renders_as(formula, "(00,01,10,11) -> (0,100,101,11)"));
        s.add("zeta: pair is reduced", parse_element("(00,01,10,11)->(0,100,101,11)").is_reduced());
        s.add("zeta: 1/2 maps to 5/8", zeta.eval(dy("1/2")) == dy("5/8"));
    });
    s.guard("x0, x1", [&] {
        PLMap x0 = PLMap::from_lift(Carrier::Interval, PLFragment({0, dy("1/2"), dy("3/4"), 1},
                                                                  {0, dy("1/4"), dy("1/2"), 1}).inverse());
        s.add("x0: tree pair equals its three-piece formula", standard::x0() == x0);
        s.add("x0: renders as (00,01,1) -> (0,10,11)",
              renders_as(standard::x0(), "(00,01,1) -> (0,10,11)"));
        s.add("x1: renders as (0,100,101,11) -> (0,10,110,111)",
              renders_as(standard::x1(), "(0,100,101,11) -> (0,10,110,111)"));
    });
    s.guard("criterion graph", [&] {
        const CoreGraph g = criterion_graph();
        s.add("criterion graph has 4 vertices", g.size() == 4);
        s.add("single vertex graph is not the criterion graph",
              !is_generation_graph(build_core(std::vector<PLMap>{PLMap::identity()}).graph));
    });
    s.guard("kappa0, kappa1 core", [&] {
        FiniteCase fc = prop_finite_data('a');
        CoreResult core = build_core(std::vector<PLMap>{fc.kappa0, fc.kappa1});
        s.add("kappa0, kappa1: initial relation has 23 classes", core.initial.class_count() == 23,
              std::to_string(core.initial.class_count()));
        s.add("kappa0, kappa1: final relation has 4 classes", core.final.class_count() == 4,
              std::to_string(core.final.class_count()));
        s.add("kappa0, kappa1: core DOT equals the criterion DOT",
              to_dot(core.graph) == to_dot(criterion_graph()));
    });
    return s;
}

Suite case_a_suite(int depth) {
    Suite s;
    s.guard("case a", [&] {
        FiniteCase fc = prop_finite_data('a');
        s.add("case a: kappa1 = (00,010,011,100,101,11) -> (00,01,100,101,110,111)",
              renders_as(fc.kappa1, "(00,010,011,100,101,11) -> (00,01,100,101,110,111)"));
        CoreResult core = build_core(std::vector<PLMap>{fc.kappa0, fc.kappa1});
        s.add("case a: 23 initial classes", core.initial.class_count() == 23);
        s.add("case a: 4 final classes", core.final.class_count() == 4);
        generation_checks(s, "case a", fc.kappa0, fc.kappa1, depth);
        s.add("case a: 0 alpha = 1/2", fc.alpha.eval(dy("0")) == dy("1/2"));
        s.add("case a: (0, 1) and (0, 1) alpha cover the circle", translates_cover(fc.alpha, 0, 0, 2));
    });
    return s;
}

Suite case_b_suite() {
    Suite s;
    s.guard("case b", [&] {
        FiniteCase fc = prop_finite_data('b');
        PLMap zeta = standard::zeta();
        PLMap za = conjugate(zeta, fc.alpha);
        s.add("case b: zeta^alpha = x1", za == standard::x1(), from_plmap(za).str());
        s.add("case b: zeta^alpha renders as (0,100,101,11) -> (0,10,110,111)",
              renders_as(za, "(0,100,101,11) -> (0,10,110,111)"));
        PLMap prod = compose(zeta, za);
        s.add("case b: zeta zeta^alpha = x0", prod == standard::x0(), from_plmap(prod).str());
        s.add("case b: 0 alpha = 1/2", fc.alpha.eval(dy("0")) == dy("1/2"));
        s.add("case b: (0, 1) and (0, 1) alpha cover the circle", translates_cover(fc.alpha, 0, 0, 2));
    });
    return s;
}

Suite case_c_suite(int depth) {
    Suite s;
    for (int p : {5, 7, 11}) {
        std::string label = "case c (p = " + std::to_string(p) + ")";
        s.guard(label, [&] {
            FiniteCase fc = prop_finite_data('c', p);
            s.add(label + ": kappa1 = (00,010,011,10,110,111) -> (00,01,10,1100,1101,111)",
                  renders_as(fc.kappa1, "(00,010,011,10,110,111) -> (00,01,10,1100,1101,111)"));
            s.add(label + ": supp kappa0 = (0, 3/4)", support(fc.kappa0).str() == "{(0, 3/4)}",
                  support(fc.kappa0).str());
            s.add(label + ": kappa0^tau = kappa0", *fc.kappa0_tau == fc.kappa0);
            s.add(label + ": kappa1^tau = (00,010,011,1) -> (00,01,10,11)",
                  renders_as(*fc.kappa1_tau, "(00,010,011,1) -> (00,01,10,11)"));
            s.add(label + ": kappa0, kappa1 lie in T_[0,7/8]",
                  is_member(fc.kappa0, GroupSpec::f_box(0, dy("7/8"))) &&
                      is_member(fc.kappa1, GroupSpec::f_box(0, dy("7/8"))));
            generation_checks(s, label, *fc.kappa0_tau, *fc.kappa1_tau, depth);
            s.add(label + ": translates of (0, 7/8) by alpha cover the circle",
                  translates_cover(fc.alpha, 0, CirclePoint(dy("7/8")), p));
        });
    }
    return s;
}

Suite prop_infinite_suite() {
    Suite s;
    struct Input {
        std::string label;
        PLMap alpha;
        const char *a;
    };
    for (const Input &in : {Input{"alpha = x0", standard::x0(), "1/4"}, Input{"alpha = zeta", standard::zeta(), "1/8"}}) {
        s.guard(in.label, [&] {
            PipelineState st = prop_infinite_pipeline(in.alpha, standard::zeta(), CirclePoint(dy(in.a)));
            for (const Check &c : st.checks) {
                s.add(in.label + ": " + c.name, c.pass, c.detail);
            }
        });
    }
    s.guard("power search", [&] {
        auto found = power_search(rotation(dy("1/2")));
        s.add("power search: rotation by 1/2 needs n = 2", found && found->n == 2);
        auto direct = power_search(standard::x0().as_circle());
        s.add("power search: x0 needs n = 1", direct && direct->n == 1);
    });
    return s;
}

Suite presentation_suite(int depth) {
    Suite s;
    s.guard("presentation", [&] {
        std::vector<PLMap> x;
        for (int n = 0; n <= 5; n++) {
            x.push_back(standard::x(n));
        }
        for (int i = 0; i <= 4; i++) {
            for (int j = i + 1; j <= 4; j++) {
                std::string name = "x" + std::to_string(j) + "^x" + std::to_string(i) + " = x" + std::to_string(j + 1);
                s.add(name, conjugate(x[static_cast<size_t>(j)], x[static_cast<size_t>(i)]) == x[static_cast<size_t>(j) + 1]);
            }
        }
        GenVerdict v = generates_F({x[0], x[1]}, depth);
        s.add("x0, x1 generate F", v.verdict == GenVerdict::Kind::Yes, verdict_name(v.verdict));
        GenVerdict single = generates_F({x[1]}, depth);
        s.add("x1 alone does not generate F", single.verdict == GenVerdict::Kind::No);
    });
    return s;
}

Suite torsion_suite() {
    Suite s;
    for (int p : {2, 3, 5, 7}) {
        std::string label = "p = " + std::to_string(p);
        s.guard(label, [&] {
            PLMap t = standard::torsion_rep(p);
            s.add(label + ": alpha^p = 1", power(t, p).is_identity());
            auto rot = rotation_number(t);
            s.add(label + ": rotation number 1/" + std::to_string(p), rot && *rot == Fraction{1, p},
                  rot ? rot->str() : "unknown");
        });
    }
    return s;
}

Suite conjugator_suite(const ReproOptions &opt) {
    Suite s;
    std::mt19937_64 rng(opt.seed);
    int passed = 0;
    std::string first_failure;
    for (int n = 0; n < opt.conjugator_instances; n++) {
        ConjugatorSpec spec = random_conjugator_spec(rng);
        try {
            PLMap gamma = construct_conjugator(spec);
            if (check_conjugator(spec, gamma).ok()) {
                passed++;
                continue;
            }
            first_failure = first_failure.empty() ? "instance " + std::to_string(n) : first_failure;
        } catch (const std::exception &e) {
            first_failure = first_failure.empty() ? "instance " + std::to_string(n) + ": " + e.what() : first_failure;
        }
    }
    s.add("conjugator postconditions " + std::to_string(passed) + "/" + std::to_string(opt.conjugator_instances),
          passed == opt.conjugator_instances, first_failure);
    s.guard("conjugator example", [&] {
        PLMap z = standard::zeta().as_circle();
        ConjugatorSpec spec{z, z, 1, dy("1/8"), dy("1/8"), dy("9/16"), dy("5/8")};
        s.add("conjugator: zeta, p = q = 1/8, k = 1, [r, s] = [9/16, 5/8]",
              check_conjugator(spec, construct_conjugator(spec)).ok());
    });
    return s;
}

Suite factorisation_suite(const ReproOptions &opt) {
    Suite s;
    std::mt19937_64 rng(opt.seed);
    int passed = 0;
    std::string first_failure;
    for (int n = 0; n < opt.factorisation_instances; n++) {
        FactorInstance in = random_factor_instance(rng);
        try {
            Factorisation f = factor_over_cover(in.gamma, in.a, in.b, in.c, in.d);
            bool ok = f.product() == in.gamma && is_member(f.alpha, GroupSpec::f_box(in.a, in.c)) &&
                      is_member(f.beta, GroupSpec::f_box(in.b, in.d));
            if (ok) {
                passed++;
                continue;
            }
            first_failure = first_failure.empty() ? "instance " + std::to_string(n) : first_failure;
        } catch (const std::exception &e) {
            first_failure = first_failure.empty() ? "instance " + std::to_string(n) + ": " + e.what() : first_failure;
        }
    }
    s.add("factorisation " + std::to_string(passed) + "/" + std::to_string(opt.factorisation_instances),
          passed == opt.factorisation_instances, first_failure);
    return s;
}

Suite coarsening_suite(const ReproOptions &opt) {
    Suite s;
    std::mt19937_64 rng(opt.seed);
    FiniteCase fc = prop_finite_data('a');
    struct Input {
        std::string label;
        std::vector<PLMap> gens;
    };
    for (const Input &in : {Input{"kappa0, kappa1", {fc.kappa0, fc.kappa1}},
                            Input{"x0, x1", {standard::x0(), standard::x1()}}}) {
        CoreResult core = build_core(in.gens);
        bool same = true, monotone = true;
        for (int n = 0; n < opt.schedules; n++) {
            std::vector<size_t> trace;
            EquivRelation rel = coarsen(core.forest, core.initial, &rng, &trace);
            same = same && rel == core.final;
            monotone = monotone && std::is_sorted(trace.rbegin(), trace.rend());
        }
        std::string count = std::to_string(opt.schedules);
        s.add(in.label + ": " + count + " random schedules reach the same partition", same);
        s.add(in.label + ": class counts never increase", monotone);
    }
    return s;
}

}  // namespace

const std::vector<std::string> &suite_names() {
    static const std::vector<std::string> names{"figures",      "case-a",  "case-b",     "case-c",
                                                "prop-infinite", "presentation", "torsion", "conjugator",
                                                "factorisation", "coarsening"};
    return names;
}

ConjugatorSpec random_conjugator_spec(std::mt19937_64 &rng) {
    const PLMap zeta = standard::zeta().as_circle();
    const CirclePoint base(Dyadic(1, 3));
    auto sample = [&](CirclePoint &point) {
        PLMap g = random_element(rng, 1 + static_cast<int>(draw(rng, 8)), Carrier::Circle);
        int e = 1 + static_cast<int>(draw(rng, 3));
        point = g.eval(base);
        return conjugate(power(zeta, e), g);
    };
    ConjugatorSpec spec;
    spec.mu = sample(spec.p);
    spec.nu = sample(spec.q);
    spec.k = 1 + static_cast<int>(draw(rng, 5));
    CirclePoint end = spec.q;
    for (int i = 0; i <= spec.k; i++) {
        end = spec.nu.eval(end);
    }
    uint64_t i = 1 + draw(rng, 62);
    uint64_t j = i + 1 + draw(rng, 63 - i);
    spec.r = circ_interp(end, spec.q, Dyadic(static_cast<long>(i), 6));
    spec.s = circ_interp(end, spec.q, Dyadic(static_cast<long>(j), 6));
    return spec;
}

FactorInstance random_factor_instance(std::mt19937_64 &rng) {
    std::vector<long> grid;
    while (grid.size() < 4) {
        long v = static_cast<long>(draw(rng, 17));
        if (std::find(grid.begin(), grid.end(), v) == grid.end()) {
            grid.push_back(v);
        }
    }
    std::sort(grid.begin(), grid.end());
    FactorInstance in;
    in.a = Dyadic(grid[0], 4);
    in.b = Dyadic(grid[1], 4);
    in.c = Dyadic(grid[2], 4);
    in.d = Dyadic(grid[3], 4);
    PLMap base = random_element(rng, 2 + static_cast<int>(draw(rng, 8)), Carrier::Interval);
    in.gamma = transport(base, thompson_like_map(Dyadic(0), Dyadic(1), in.a, in.d));
    return in;
}

std::vector<SuiteReport> run_repro(const std::string &suite, const ReproOptions &options) {
    if (suite == "all") {
        std::vector<SuiteReport> out;
        for (const std::string &name : suite_names()) {
            out.push_back(run_repro(name, options).front());
        }
        return out;
    }
    Suite s;
    if (suite == "figures") {
        s = figures_suite();
    } else if (suite == "case-a") {
        s = case_a_suite(options.depth);
    } else if (suite == "case-b") {
        s = case_b_suite();
    } else if (suite == "case-c") {
        s = case_c_suite(options.depth);
    } else if (suite == "prop-infinite") {
        s = prop_infinite_suite();
    } else if (suite == "presentation") {
        s = presentation_suite(options.depth);
    } else if (suite == "torsion") {
        s = torsion_suite();
    } else if (suite == "conjugator") {
        s = conjugator_suite(options);
    } else if (suite == "factorisation") {
        s = factorisation_suite(options);
    } else if (suite == "coarsening") {
        s = coarsening_suite(options);
    } else {
        throw PreconditionError("unknown suite '" + suite + "'");
    }
    return {SuiteReport{suite, std::move(s.checks)}};
}

}  // namespace thompson
