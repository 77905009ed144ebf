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

#include "thompson/dyadic.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"

using namespace thompson;
using thompson::testing::dy;

TEST(dyadic, parse_forms) {
    EXPECT_EQ(dy("3/8"), Dyadic(3, 3));
    EXPECT_EQ(dy("3/2^3"), Dyadic(3, 3));
    EXPECT_EQ(dy("-5"), Dyadic(-5));
    EXPECT_EQ(dy("6/16"), Dyadic(3, 3));
    EXPECT_EQ(dy("0/4"), Dyadic(0));
    EXPECT_EQ(dy(" 1/2 "), Dyadic(1, 1));
}

TEST(dyadic, parse_errors_carry_position) {
    try {
        Dyadic::parse("1/3");
        FAIL() << "1/3 accepted";
    } catch (const ParseError &e) {
        EXPECT_EQ(e.position, 2u);
    }
    EXPECT_THROW(Dyadic::parse(""), ParseError);
    EXPECT_THROW(Dyadic::parse("1/0"), ParseError);
    EXPECT_THROW(Dyadic::parse("x"), ParseError);
    EXPECT_THROW(Dyadic::parse("1/2/4"), ParseError);
}

TEST(dyadic, normalized_representation) {
    Dyadic d(mpz_class(12), 4);
    EXPECT_EQ(d.num(), 3);
    EXPECT_EQ(d.exp(), 2u);
    EXPECT_EQ(Dyadic(mpz_class(8), 3), Dyadic(1));
    EXPECT_EQ(Dyadic(mpz_class(8), 3).exp(), 0u);
}

TEST(dyadic, arithmetic_matches_rationals) {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 500; i++) {
        mpz_class an = static_cast<long>(rng() % 2001) - 1000;
        mpz_class bn = static_cast<long>(rng() % 2001) - 1000;
        uint32_t ae = static_cast<uint32_t>(rng() % 20), be = static_cast<uint32_t>(rng() % 20);
        Dyadic a(an, ae), b(bn, be);
        Rational qa(an, mpz_class(1) << ae), qb(bn, mpz_class(1) << be);
        qa.canonicalize();
        qb.canonicalize();
        EXPECT_EQ((a + b).to_rational(), Rational(qa + qb));
        EXPECT_EQ((a - b).to_rational(), Rational(qa - qb));
        EXPECT_EQ((a * b).to_rational(), Rational(qa * qb));
        EXPECT_EQ(a < b, qa < qb);
        EXPECT_EQ(a == b, qa == qb);
    }
}

TEST(dyadic, floor_and_frac) {
    EXPECT_EQ(dy("7/4").floor(), 1);
    EXPECT_EQ(dy("-1/4").floor(), -1);
    EXPECT_EQ(dy("-1/4").frac(), dy("3/4"));
    EXPECT_EQ(dy("5").frac(), Dyadic(0));
}

TEST(dyadic, powers_of_two) {
    EXPECT_EQ(Dyadic::pow2(-3), dy("1/8"));
    EXPECT_EQ(Dyadic::pow2(4), Dyadic(16));
    EXPECT_EQ(dy("1/8").log2(), -3);
    EXPECT_EQ(dy("3/8").log2(), std::nullopt);
    EXPECT_EQ(log2_ratio(dy("1/2"), dy("1/8")), 2);
    EXPECT_EQ(log2_ratio(dy("3/4"), dy("1/8")), std::nullopt);
    EXPECT_EQ(dy("3/8").mul_pow2(2), dy("3/2"));
}

TEST(dyadic, rendering) {
    EXPECT_EQ(dy("3/8").str(), "3/8");
    EXPECT_EQ(Dyadic(-2).str(), "-2");
    EXPECT_EQ(Dyadic(0).str(), "0");
}

TEST(circle_point, reduces_mod_one) {
    EXPECT_EQ(CirclePoint(dy("5/4")), CirclePoint(dy("1/4")));
    EXPECT_EQ(CirclePoint(dy("-1/4")).pos(), dy("3/4"));
    EXPECT_EQ(CirclePoint(dy("1/4")).arc_length_to(CirclePoint(dy("1/8"))), dy("7/8"));
    EXPECT_EQ(CirclePoint(dy("1/4")).arc_length_to(CirclePoint(dy("1/4"))), Dyadic(1));
}

TEST(circle_point, cyclic_order) {
    CirclePoint a(dy("3/4")), b(dy("0")), c(dy("1/4"));
    EXPECT_TRUE(circ_between(a, b, c));
    EXPECT_FALSE(circ_between(c, b, a));
    EXPECT_TRUE(circ_chain({a, b, c}));
    EXPECT_TRUE(circ_chain({b, c, a}));
    EXPECT_FALSE(circ_chain({a, c, b}));
    EXPECT_EQ(circ_interp(a, c, dy("1/2")), b);
}
