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

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "thompson/groupcalc.hpp"
#include "thompson/treepair.hpp"

using namespace thompson;
using thompson::testing::dy;
using thompson::testing::random_unit_dyadic;

namespace {

PLMap zeta_formula() {
    return PLMap::from_lift(Carrier::Interval,
                            PLFragment({0, dy("1/4"), dy("3/4"), 1}, {0, dy("1/2"), dy("3/4"), 1}));
}

struct Sample {
    PLMap f = PLMap::identity(), g = PLMap::identity(), h = PLMap::identity();
};

std::vector<Sample> samples(Carrier carrier, int count, uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Sample> out;
    for (int i = 0; i < count; i++) {
        auto leaves = [&] { return 1 + static_cast<int>(rng() % 9); };
        out.push_back({random_element(rng, leaves(), carrier), random_element(rng, leaves(), carrier),
                       random_element(rng, leaves(), carrier)});
    }
    return out;
}

class GroupAxioms : public ::testing::TestWithParam<Carrier> {};

}  // namespace

TEST(plmap, evaluates_three_piece_formula) {
    PLMap z = zeta_formula();
    EXPECT_EQ(z.eval(dy("1/8")), dy("1/4"));
    EXPECT_EQ(z.eval(dy("1/2")), dy("5/8"));
    EXPECT_EQ(z.eval(dy("7/8")), dy("7/8"));
    EXPECT_THROW(z.eval(dy("3/2")), PreconditionError);
}

TEST(plmap, rejects_bad_slopes_and_breakpoints) {
    EXPECT_THROW(PLFragment({0, 1}, {0, dy("3/4")}), Error);
    EXPECT_THROW(PLFragment({0, dy("1/2"), 1}, {0, 1}), Error);
    EXPECT_THROW(PLMap::from_lift(Carrier::Interval, PLFragment({0, 1}, {dy("1/2"), dy("3/2")})), Error);
}

TEST(plmap, canonical_form_merges_equal_slopes) {
    PLMap a = PLMap::from_lift(Carrier::Interval, PLFragment({0, dy("1/2"), 1}, {0, dy("1/2"), 1}));
    EXPECT_TRUE(a.is_identity());
    EXPECT_EQ(a, PLMap::identity());
    EXPECT_TRUE(zeta_formula().breakpoints() == (std::vector<Dyadic>{dy("1/4"), dy("3/4")}));
}

TEST_P(GroupAxioms, composition_is_pointwise) {
    std::mt19937_64 rng(7);
    for (const Sample &s : samples(GetParam(), 60, 11)) {
        PLMap fg = compose(s.f, s.g);
        for (int i = 0; i < 10; i++) {
            Dyadic x = random_unit_dyadic(rng);
            EXPECT_EQ(fg.eval(x), s.g.eval(s.f.eval(x)));
        }
    }
}

TEST_P(GroupAxioms, associativity_inverse_identity) {
    const PLMap e = PLMap::identity(GetParam());
    for (const Sample &s : samples(GetParam(), 60, 12)) {
        EXPECT_EQ(compose(compose(s.f, s.g), s.h), compose(s.f, compose(s.g, s.h)));
        EXPECT_TRUE(compose(s.f, inverse(s.f)).is_identity());
        EXPECT_TRUE(compose(inverse(s.f), s.f).is_identity());
        EXPECT_EQ(compose(s.f, e), s.f);
        EXPECT_EQ(compose(e, s.f), s.f);
        EXPECT_EQ(inverse(inverse(s.f)), s.f);
        EXPECT_EQ(inverse(compose(s.f, s.g)), compose(inverse(s.g), inverse(s.f)));
    }
}

TEST_P(GroupAxioms, conjugation_power_commutator) {
    for (const Sample &s : samples(GetParam(), 40, 13)) {
        EXPECT_EQ(conjugate(s.f, s.g), product({inverse(s.g), s.f, s.g}));
        EXPECT_EQ(power(s.f, 3), product({s.f, s.f, s.f}));
        EXPECT_EQ(power(s.f, -2), inverse(compose(s.f, s.f)));
        EXPECT_TRUE(power(s.f, 0).is_identity());
        EXPECT_EQ(commutator(s.f, s.g), product({inverse(s.f), inverse(s.g), s.f, s.g}));
        EXPECT_EQ(conjugate(compose(s.f, s.h), s.g), compose(conjugate(s.f, s.g), conjugate(s.h, s.g)));
    }
}

TEST_P(GroupAxioms, slopes_and_breakpoints_stay_dyadic) {
    for (const Sample &s : samples(GetParam(), 40, 14)) {
        PLMap p = product({s.f, inverse(s.g), s.h});
        const PLFragment &lift = p.lift();
        for (size_t i = 0; i < lift.piece_count(); i++) {
            Dyadic dx = lift.xs()[i + 1] - lift.xs()[i];
            Dyadic dyv = lift.ys()[i + 1] - lift.ys()[i];
            EXPECT_TRUE(log2_ratio(dyv, dx).has_value());
        }
    }
}

INSTANTIATE_TEST_SUITE_P(carriers, GroupAxioms, ::testing::Values(Carrier::Interval, Carrier::Circle));

TEST(plmap, rotation) {
    PLMap r = rotation(dy("1/4"));
    EXPECT_EQ(r.eval(dy("3/4")), Dyadic(0));
    EXPECT_TRUE(power(r, 4).is_identity());
    EXPECT_FALSE(power(r, 2).is_identity());
}

TEST(plmap, one_sided_slopes) {
    PLMap z = zeta_formula();
    EXPECT_EQ(one_sided_slope(z, dy("1/4"), Side::Left), 1);
    EXPECT_EQ(one_sided_slope(z, dy("1/4"), Side::Right), -1);
    EXPECT_EQ(one_sided_slope(z, Dyadic(0), Side::Right), 1);
    EXPECT_EQ(one_sided_slope(z, Dyadic(1), Side::Left), 0);
}

TEST(standard_decomposition, pieces_are_maximal_standard_intervals) {
    EXPECT_EQ(standard_decomposition(0, dy("3/4")), (std::vector<Dyadic>{0, dy("1/2"), dy("3/4")}));
    EXPECT_EQ(standard_decomposition(dy("1/8"), 1), (std::vector<Dyadic>{dy("1/8"), dy("1/4"), dy("1/2"), 1}));
    std::mt19937_64 rng(3);
    for (int i = 0; i < 200; i++) {
        Dyadic p = random_unit_dyadic(rng), q = random_unit_dyadic(rng);
        if (p == q) {
            continue;
        }
        if (q < p) {
            std::swap(p, q);
        }
        std::vector<Dyadic> cuts = standard_decomposition(p, q);
        ASSERT_EQ(cuts.front(), p);
        ASSERT_EQ(cuts.back(), q);
        for (size_t j = 0; j + 1 < cuts.size(); j++) {
            Dyadic len = cuts[j + 1] - cuts[j];
            auto k = len.log2();
            ASSERT_TRUE(k.has_value());
            // Left endpoint is a multiple of the length.
            EXPECT_TRUE(cuts[j].is_multiple_of_pow2(*k));
        }
    }
}

TEST(thompson_like_map, sends_endpoints_with_dyadic_slopes) {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 200; i++) {
        Dyadic v[4];
        for (Dyadic &d : v) {
            d = random_unit_dyadic(rng, 8);
        }
        if (v[0] == v[1] || v[2] == v[3]) {
            continue;
        }
        Dyadic p = std::min(v[0], v[1]), q = std::max(v[0], v[1]);
        Dyadic r = std::min(v[2], v[3]), s = std::max(v[2], v[3]);
        PLFragment t = thompson_like_map(p, q, r, s);
        EXPECT_EQ(t.domain_lo(), p);
        EXPECT_EQ(t.domain_hi(), q);
        EXPECT_EQ(t.eval(p), r);
        EXPECT_EQ(t.eval(q), s);
        EXPECT_EQ(t.then(t.inverse()), PLFragment::identity(p, q));
    }
}

TEST(thompson_like_map, identical_intervals_give_identity) {
    EXPECT_EQ(thompson_like_map(dy("1/8"), dy("5/8"), dy("1/8"), dy("5/8")),
              PLFragment::identity(dy("1/8"), dy("5/8")));
}

TEST(thompson_like_map, splits_the_side_with_fewer_pieces) {
    // [0, 1] has one piece, [0, 3/4] has two; the single piece is halved.
    PLFragment t = thompson_like_map(0, 1, 0, dy("3/4"));
    EXPECT_EQ(t.xs(), (std::vector<Dyadic>{0, dy("1/2"), 1}));
    EXPECT_EQ(t.ys(), (std::vector<Dyadic>{0, dy("1/2"), dy("3/4")}));
}

TEST(support, zeta_support_and_fixed_set) {
    PLMap z = zeta_formula();
    EXPECT_EQ(support(z).str(), "{(0, 3/4)}");
    EXPECT_EQ(fixed_points(z).str(), "{0} u [3/4, 1]");
    EXPECT_TRUE(fixed_points(PLMap::identity()).everything);
    EXPECT_TRUE(support(PLMap::identity()).empty());
    EXPECT_TRUE(support(rotation(dy("1/2"))).is_full_circle());
    EXPECT_TRUE(fixed_points(rotation(dy("1/2"))).empty());
}

TEST(support, agrees_with_pointwise_fixed_test) {
    std::mt19937_64 rng(5);
    for (Carrier c : {Carrier::Interval, Carrier::Circle}) {
        for (const Sample &s : samples(c, 80, 15)) {
            FixedSet fixed = fixed_points(s.f);
            SupportSet supp = support(s.f);
            for (int i = 0; i < 40; i++) {
                Dyadic x = random_unit_dyadic(rng, 10);
                bool is_fixed = s.f.eval(x) == x;
                EXPECT_EQ(fixed.contains(x.to_rational()), is_fixed);
                EXPECT_EQ(supp.contains(x.to_rational()), !is_fixed);
            }
        }
    }
}

namespace {

// Lift value at a rational point by linear interpolation on the pieces.
Rational lift_at(const PLMap &f, const Rational &x) {
    const PLFragment &l = f.lift();
    for (size_t i = 0; i < l.piece_count(); i++) {
        Rational x0 = l.xs()[i].to_rational(), x1 = l.xs()[i + 1].to_rational();
        if (x0 <= x && x <= x1) {
            Rational y0 = l.ys()[i].to_rational(), y1 = l.ys()[i + 1].to_rational();
            return Rational(y0 + (y1 - y0) / (x1 - x0) * (x - x0));
        }
    }
    ADD_FAILURE() << "point outside the lift";
    return 0;
}

bool is_power_of_two(const mpz_class &n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

TEST(support, isolated_fixed_points_can_be_non_dyadic) {
    std::mt19937_64 rng(6);
    int non_dyadic = 0;
    for (int i = 0; i < 200; i++) {
        PLMap f = random_element(rng, 6, Carrier::Circle);
        for (const FixedComponent &fc : fixed_points(f).components) {
            for (const Rational &x : {fc.lo, fc.hi}) {
                Rational shift = lift_at(f, x) - x;
                EXPECT_EQ(shift.get_den(), 1) << x;
                if (!is_power_of_two(x.get_den())) {
                    non_dyadic++;
                }
            }
        }
    }
    EXPECT_GT(non_dyadic, 0);
}

TEST(restrict_patch, reassembles_restrictions) {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 50; i++) {
        PLMap f = random_element(rng, 5, Carrier::Interval);
        Dyadic m = dy("3/8");
        PLMap g = restrict_patch(Carrier::Interval, {f.restrict(0, m), f.restrict(m, 1)});
        EXPECT_EQ(g, f);
    }
}

TEST(transport, moves_an_element_into_a_box) {
    PLFragment tau = thompson_like_map(0, 1, dy("1/4"), dy("1/2"));
    PLMap moved = transport(standard::x0(), tau);
    EXPECT_EQ(support(moved).str(), "{(1/4, 1/2)}");
    EXPECT_EQ(moved.eval(tau.eval(dy("1/8"))), tau.eval(standard::x0().eval(dy("1/8"))));
}

TEST(arcs, agree_on_arc_allows_lift_shift) {
    PLMap z = zeta_formula().as_circle();
    PLMap shifted = compose(z, rotation(1));
    EXPECT_TRUE(agree_on_arc(z, shifted, dy("1/8"), dy("1/2")));
    EXPECT_FALSE(agree_on_arc(z, PLMap::identity(Carrier::Circle), dy("1/8"), dy("1/2")));
    EXPECT_TRUE(acts_trivially_on_arc(z, dy("3/4"), Dyadic(0)));
    EXPECT_FALSE(acts_trivially_on_arc(z, dy("1/2"), Dyadic(0)));
}

TEST(arcs, union_and_intersection) {
    ArcUnion a({OpenArc::make(0, Rational(1, 2)), OpenArc::make(Rational(1, 4), Rational(3, 4))});
    EXPECT_EQ(a.str(), "{(0, 3/4)}");
    ArcUnion b({OpenArc::make(Rational(1, 2), Rational(1))});
    EXPECT_EQ(intersect(a, b).str(), "{(1/2, 3/4)}");
    ArcUnion wrap({OpenArc::make(Rational(3, 4), Rational(1, 4))});
    EXPECT_TRUE(wrap.contains(Rational(0)));
    EXPECT_FALSE(wrap.contains(Rational(1, 2)));
    EXPECT_TRUE(ArcUnion({OpenArc::make(Rational(0), Rational(0)), OpenArc::make(Rational(1, 2), Rational(3, 2))}).is_full_circle());
}
