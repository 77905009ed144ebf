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

#include "thompson/golan.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "thompson/construct.hpp"
#include "thompson/groupcalc.hpp"
#include "thompson/treepair.hpp"

using namespace thompson;
using thompson::testing::dy;

namespace {

// Whether (x, y) is an integer combination of gens with coefficients in
// [-bound, bound], by exhaustive search over two or three generators.
bool brute_force_contains(const std::vector<GermVector> &gens, int64_t x, int64_t y, int bound) {
    std::vector<int> c(gens.size(), -bound);
    while (true) {
        int64_t sx = 0, sy = 0;
        for (size_t i = 0; i < gens.size(); i++) {
            sx += c[i] * gens[i].at_zero;
            sy += c[i] * gens[i].at_one;
        }
        if (sx == x && sy == y) {
            return true;
        }
        size_t i = 0;
        while (i < c.size() && c[i] == bound) {
            c[i++] = -bound;
        }
        if (i == c.size()) {
            return false;
        }
        c[i]++;
    }
}

}  // namespace

TEST(germ_vector, standard_elements) {
    EXPECT_EQ(germ_vector(standard::x0()), (GermVector{1, -1}));
    EXPECT_EQ(germ_vector(standard::x1()), (GermVector{0, -1}));
    EXPECT_EQ(germ_vector(standard::zeta()), (GermVector{1, 0}));
    EXPECT_EQ(germ_vector(PLMap::identity()), (GermVector{0, 0}));
    EXPECT_THROW(germ_vector(standard::torsion_rep(2)), PreconditionError);
}

TEST(germ_vector, is_a_homomorphism) {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 100; i++) {
        PLMap f = random_element(rng, 2 + static_cast<int>(rng() % 6), Carrier::Interval);
        PLMap g = random_element(rng, 2 + static_cast<int>(rng() % 6), Carrier::Interval);
        GermVector a = germ_vector(f), b = germ_vector(g), ab = germ_vector(compose(f, g));
        EXPECT_EQ(ab, (GermVector{a.at_zero + b.at_zero, a.at_one + b.at_one}));
        EXPECT_EQ(a.at_zero, one_sided_slope(f, Dyadic(0), Side::Right));
        EXPECT_EQ(a.at_one, one_sided_slope(f, Dyadic(1), Side::Left));
    }
}

TEST(lattice, hermite_normal_form) {
    EXPECT_EQ(Lattice2({{1, -1}, {0, -1}}).str(), "[(1, 0), (0, 1)]");
    EXPECT_EQ(Lattice2({{2, 4}, {3, 6}}).str(), "[(1, 2), (0, 0)]");
    EXPECT_EQ(Lattice2({}).str(), "[(0, 0), (0, 0)]");
    Lattice2 l({{2, 0}, {0, 2}});
    EXPECT_FALSE(l.contains(1, 0));
    EXPECT_TRUE(l.contains(4, -2));
}

TEST(lattice, membership_matches_bounded_search) {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 60; i++) {
        std::vector<GermVector> gens;
        size_t n = 2 + rng() % 2;
        for (size_t j = 0; j < n; j++) {
            gens.push_back({static_cast<int64_t>(rng() % 7) - 3, static_cast<int64_t>(rng() % 7) - 3});
        }
        Lattice2 l(gens);
        for (int64_t x = -2; x <= 2; x++) {
            for (int64_t y = -2; y <= 2; y++) {
                EXPECT_EQ(l.contains(x, y), brute_force_contains(gens, x, y, 12)) << l.str() << " " << x << "," << y;
            }
        }
    }
}

TEST(words, render_and_evaluate) {
    Word w{{0, 1}, {1, -1}};
    std::vector<std::string> names{"a", "b"};
    EXPECT_EQ(word_str(w, names), "a b^-1");
    EXPECT_EQ(word_str({}, names), "1");
    EXPECT_EQ(evaluate(w, {standard::x0(), standard::x1()}), compose(standard::x0(), inverse(standard::x1())));
}

TEST(is_xi_point, slopes_one_then_two) {
    FiniteCase a = prop_finite_data('a');
    EXPECT_TRUE(is_xi_point(a.kappa1, dy("1/4")));
    EXPECT_FALSE(is_xi_point(a.kappa1, dy("1/2")));
    EXPECT_TRUE(is_xi_point(standard::x1(), dy("1/2")));
    EXPECT_FALSE(is_xi_point(inverse(standard::x1()), dy("1/2")));
    EXPECT_FALSE(is_xi_point(standard::x1(), Dyadic(0)));
}

TEST(find_witnesses, finite_case_a) {
    FiniteCase a = prop_finite_data('a');
    Witnesses w = find_witnesses({a.kappa0, a.kappa1});
    ASSERT_TRUE(w.complete());
    std::vector<std::string> names{"k0", "k1"};
    EXPECT_EQ(word_str(*w.mu, names), "k0");
    EXPECT_EQ(word_str(*w.nu, names), "k1^-1");
    EXPECT_EQ(word_str(*w.xi, names), "k1");
    EXPECT_EQ(*w.x, dy("1/4"));
    EXPECT_EQ(germ_vector(evaluate(*w.mu, {a.kappa0, a.kappa1})), (GermVector{1, 0}));
    EXPECT_EQ(germ_vector(evaluate(*w.nu, {a.kappa0, a.kappa1})), (GermVector{0, 1}));
}

TEST(generates_F, verdicts) {
    FiniteCase a = prop_finite_data('a');
    EXPECT_EQ(generates_F({a.kappa0, a.kappa1}).verdict, GenVerdict::Kind::Yes);
    EXPECT_EQ(generates_F({standard::x0(), standard::x1()}).verdict, GenVerdict::Kind::Yes);
    GenVerdict single = generates_F({standard::x1()});
    EXPECT_EQ(single.verdict, GenVerdict::Kind::No);
    EXPECT_EQ(single.failed_condition, "core");
    EXPECT_EQ(generates_F({}).verdict, GenVerdict::Kind::No);
}

TEST(generates_F, germ_lattice_failure) {
    PLMap g = to_plmap(parse_element("(000,001,010,011,1)->(000,0010,0011,01,1)"));
    GenVerdict v = generates_F({inverse(standard::x0()), g});
    EXPECT_EQ(v.verdict, GenVerdict::Kind::No);
    EXPECT_EQ(v.failed_condition, "lattice");
    EXPECT_FALSE(v.lattice.has_01);
}

TEST(generates_F, shallow_search_is_inconclusive) {
    GenVerdict shallow = generates_F({standard::x0(), standard::zeta()}, 1);
    EXPECT_EQ(shallow.verdict, GenVerdict::Kind::Unknown);
    EXPECT_EQ(shallow.failed_condition, "xi-search");
    EXPECT_EQ(generates_F({standard::x0(), standard::zeta()}, 6).verdict, GenVerdict::Kind::Yes);
}
