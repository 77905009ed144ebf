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

#include "thompson/treepair.hpp"

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "thompson/groupcalc.hpp"

using namespace thompson;
using thompson::testing::dy;
using thompson::testing::word_left;

namespace {

size_t parse_error_position(const std::string &text) {
    try {
        parse_element(text);
    } catch (const ParseError &e) {
        return e.position;
    }
    ADD_FAILURE() << "accepted: " << text;
    return 0;
}

}  // namespace

TEST(binary_word, intervals) {
    BinaryWord w("101");
    EXPECT_EQ(w.left(), dy("5/8"));
    EXPECT_EQ(w.right(), dy("3/4"));
    EXPECT_EQ(BinaryWord::from_interval(dy("5/8"), 3), w);
    EXPECT_EQ(BinaryWord().str(), "e");
    EXPECT_TRUE(BinaryWord("10").is_prefix_of(w));
    EXPECT_THROW(BinaryWord("102"), Error);
}

TEST(tree, leaves_must_form_a_complete_antichain) {
    EXPECT_NO_THROW(Tree({BinaryWord("0"), BinaryWord("10"), BinaryWord("11")}));
    EXPECT_THROW(Tree({BinaryWord("0"), BinaryWord("10")}), Error);
    EXPECT_THROW(Tree({BinaryWord("0"), BinaryWord("01"), BinaryWord("1")}), Error);
    Tree t({BinaryWord("00"), BinaryWord("01"), BinaryWord("1")});
    EXPECT_EQ(t.vertices().size(), 5u);
    EXPECT_TRUE(t.is_exposed_caret(BinaryWord("0")));
    EXPECT_FALSE(t.is_exposed_caret(BinaryWord()));
}

TEST(parse_element, round_trips_canonical_notation) {
    for (const char *text : {"(00,01,10,11) -> (0,100,101,11)", "(00,01,1) -> (0,10,11)",
                             "(0,100,101,11) -> (0,10,110,111)", "(0,1) -> (1,0)", "(0,10,11) -> (10,11,0)",
                             "(e) -> (e)"}) {
        EXPECT_EQ(parse_element(text).str(), text);
    }
    EXPECT_EQ(parse_element(" ( 00 ,01,1 )->( 0,10 , 11 ) ").str(), "(00,01,1) -> (0,10,11)");
}

TEST(parse_element, offsets_come_from_the_image_rotation) {
    EXPECT_EQ(parse_element("(0,1)->(1,0)").offset(), 1u);
    EXPECT_EQ(parse_element("(0,10,11)->(10,11,0)").offset(), 1u);
    EXPECT_EQ(parse_element("(0,10,11)->(11,0,10)").offset(), 2u);
    EXPECT_EQ(parse_element("(0,10,11)->(0,10,11)").offset(), 0u);
}

TEST(parse_element, errors_report_positions) {
    EXPECT_EQ(parse_error_position("(0,1->(1,0)"), 4u);
    EXPECT_EQ(parse_error_position("(0,1)(1,0)"), 5u);
    EXPECT_EQ(parse_error_position("(0,1)->(1,0) x"), 13u);
    EXPECT_EQ(parse_error_position("0,1)->(1,0)"), 0u);
    EXPECT_EQ(parse_error_position("(0,2)->(1,0)"), 3u);
    EXPECT_THROW(parse_element("(0,1)->(0,10,11)"), ParseError);
    EXPECT_THROW(parse_element("(00,01)->(0,1)"), ParseError);
    EXPECT_THROW(parse_element("(0,10,11)->(10,0,11)"), ParseError);
    EXPECT_EQ(to_plmap(parse_element("(1,0)->(0,1)")), to_plmap(parse_element("(0,1)->(1,0)")));
}

TEST(reduce, cancels_common_carets) {
    TreePair tp = parse_element("(00,01,1)->(00,01,1)");
    EXPECT_FALSE(tp.is_reduced());
    EXPECT_EQ(reduce(tp).str(), "(e) -> (e)");
    TreePair x0_expanded = parse_element("(00,01,10,11)->(0,10,110,111)");
    EXPECT_EQ(reduce(x0_expanded).str(), "(00,01,1) -> (0,10,11)");
    EXPECT_TRUE(reduce(x0_expanded).is_reduced());
    EXPECT_EQ(to_plmap(x0_expanded), to_plmap(reduce(x0_expanded)));
}

TEST(to_plmap, leaves_map_affinely_onto_leaves) {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 200; i++) {
        Carrier c = i % 2 ? Carrier::Circle : Carrier::Interval;
        TreePair tp = random_tree_pair(rng, 1 + static_cast<int>(rng() % 10), c);
        PLMap f = to_plmap(tp);
        for (size_t j = 0; j < tp.leaf_count(); j++) {
            const std::string &d = tp.domain().leaves()[j].bits();
            const std::string &r = tp.image_of_leaf(j).bits();
            Rational x = word_left(d), y = word_left(r);
            EXPECT_EQ(f.eval(d.empty() ? Dyadic(0) : tp.domain().leaves()[j].left()).to_rational(), y);
            // Midpoint goes to midpoint.
            Rational dw = Rational(1, mpz_class(1) << d.size()), rw = Rational(1, mpz_class(1) << r.size());
            Dyadic mid = tp.domain().leaves()[j].left() + Dyadic::pow2(-static_cast<int64_t>(d.size()) - 1);
            EXPECT_EQ(mid.to_rational(), Rational(x + dw / 2));
            EXPECT_EQ(f.eval(mid).to_rational(), Rational(y + rw / 2));
        }
    }
}

TEST(from_plmap, inverts_to_plmap_and_reduces) {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 300; i++) {
        Carrier c = i % 2 ? Carrier::Circle : Carrier::Interval;
        TreePair tp = random_tree_pair(rng, 1 + static_cast<int>(rng() % 12), c);
        PLMap f = to_plmap(tp);
        TreePair back = from_plmap(f);
        EXPECT_TRUE(back.is_reduced());
        EXPECT_EQ(back, reduce(tp));
        EXPECT_EQ(to_plmap(back), f);
        EXPECT_EQ(parse_element(back.str()), back);
    }
}

TEST(from_plmap, three_piece_formula_gives_zeta) {
    PLMap formula = PLMap::from_lift(Carrier::Interval,
                                     PLFragment({0, dy("1/4"), dy("3/4"), 1}, {0, dy("1/2"), dy("3/4"), 1}));
    EXPECT_EQ(from_plmap(formula).str(), "(00,01,10,11) -> (0,100,101,11)");
    EXPECT_EQ(to_plmap(parse_element("(00,01,10,11)->(0,100,101,11)")), formula);
}
