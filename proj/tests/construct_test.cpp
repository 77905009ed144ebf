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

#include <random>

#include "gtest/gtest.h"
#include "test_util.hpp"
#include "thompson/repro.hpp"
#include "thompson/treepair.hpp"

using namespace thompson;
using thompson::testing::dy;

namespace {

ConjugatorSpec zeta_spec() {
    PLMap z = standard::zeta().as_circle();
    return ConjugatorSpec{z, z, 1, dy("1/8"), dy("1/8"), dy("9/16"), dy("5/8")};
}

}  // namespace

TEST(construct_conjugator, zeta_example) {
    ConjugatorSpec spec = zeta_spec();
    PLMap gamma = construct_conjugator(spec);
    ConjugatorCheck c = check_conjugator(spec, gamma);
    EXPECT_TRUE(c.restriction);
    EXPECT_TRUE(c.chain);
    PLMap mu_gamma = conjugate(spec.mu, gamma);
    CirclePoint end = spec.nu.eval(spec.q);
    EXPECT_TRUE(agree_on_arc(mu_gamma, spec.nu, spec.q, end));
    EXPECT_TRUE(circ_chain({spec.r, spec.s, mu_gamma.eval(spec.r), mu_gamma.eval(spec.s), spec.q}));
}

TEST(construct_conjugator, random_specs) {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 30; i++) {
        ConjugatorSpec spec = random_conjugator_spec(rng);
        PLMap gamma = construct_conjugator(spec);
        EXPECT_TRUE(check_conjugator(spec, gamma).ok()) << i;
    }
}

TEST(construct_conjugator, preconditions) {
    ConjugatorSpec bad_order = zeta_spec();
    std::swap(bad_order.r, bad_order.s);
    EXPECT_THROW(construct_conjugator(bad_order), PreconditionError);
    ConjugatorSpec no_hops = zeta_spec();
    no_hops.mu = rotation(dy("1/2"));
    EXPECT_THROW(construct_conjugator(no_hops), PreconditionError);
    ConjugatorSpec zero_k = zeta_spec();
    zero_k.k = 0;
    EXPECT_THROW(construct_conjugator(zero_k), PreconditionError);
}

TEST(check_conjugator, identity_can_already_work) {
    // zeta pushes [9/16, 5/8] to [21/32, 11/16], inside (1/2, 1/8).
    EXPECT_TRUE(check_conjugator(zeta_spec(), PLMap::identity(Carrier::Circle)).ok());
    ConjugatorCheck c = check_conjugator(zeta_spec(), rotation(dy("1/2")));
    EXPECT_FALSE(c.restriction);
}

TEST(power_search, least_power_with_a_fixed_point) {
    EXPECT_EQ(power_search(rotation(dy("1/2")))->n, 2);
    EXPECT_EQ(power_search(standard::torsion_rep(5))->n, 5);
    EXPECT_EQ(power_search(standard::x0().as_circle())->n, 1);
    EXPECT_FALSE(power_search(standard::torsion_rep(7), 3).has_value());
}

TEST(pipeline, x0_and_zeta) {
    PipelineState st = prop_infinite_pipeline(standard::x0().as_circle(), standard::zeta().as_circle(), dy("1/4"));
    for (const Check &c : st.checks) {
        EXPECT_TRUE(c.pass) << c.name << " " << c.detail;
    }
    EXPECT_EQ(st.zeta_gamma, conjugate(st.zeta, st.gamma));
    EXPECT_EQ(st.cover.size(), 22u);
    CirclePoint p = st.a;
    for (int i = 1; i <= 9; i++) {
        p = st.alpha.eval(p);
        EXPECT_EQ(st.a_pts.at(i), p);
    }
    for (int i = 0; i <= 6; i++) {
        EXPECT_EQ(st.a_pts.at(i), st.b_pts.at(i));
    }
    for (int i = 7; i <= 17; i++) {
        EXPECT_TRUE(circ_chain({st.a_pts.at(i), st.b_pts.at(i), st.a_pts.at(i + 1)})) << i;
    }
}

TEST(pipeline, zeta_and_zeta) {
    PipelineState st = prop_infinite_pipeline(standard::zeta(), standard::zeta(), dy("1/8"));
    EXPECT_TRUE(all_pass(st.checks));
}

TEST(pipeline, preconditions) {
    EXPECT_THROW(prop_infinite_pipeline(standard::torsion_rep(3), standard::zeta()), PreconditionError);
    EXPECT_THROW(prop_infinite_pipeline(standard::zeta(), rotation(dy("1/4"))), PreconditionError);
    EXPECT_THROW(prop_infinite_pipeline(standard::zeta(), standard::zeta(), dy("7/8")), PreconditionError);
}

TEST(finite_cases, data) {
    FiniteCase a = prop_finite_data('a');
    EXPECT_EQ(from_plmap(a.kappa1).str(), "(00,010,011,100,101,11) -> (00,01,100,101,110,111)");
    EXPECT_EQ(a.kappa1, conjugate(a.kappa0, power(compose(a.alpha, a.kappa0), 2)));
    FiniteCase b = prop_finite_data('b');
    EXPECT_EQ(b.kappa1, standard::x1());
    FiniteCase c = prop_finite_data('c', 7);
    EXPECT_EQ(order_of(c.alpha).value, 7);
    EXPECT_EQ(case_c_tau().eval(dy("7/8")), Dyadic(1));
    EXPECT_EQ(case_c_tau().eval(dy("1/2")), dy("1/2"));
    EXPECT_THROW(prop_finite_data('c', 9), PreconditionError);
    EXPECT_THROW(prop_finite_data('d'), PreconditionError);
}

TEST(finite_cases, is_prime) {
    std::vector<int> primes;
    for (int p = 0; p < 30; p++) {
        if (is_prime(p)) {
            primes.push_back(p);
        }
    }
    EXPECT_EQ(primes, (std::vector<int>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29}));
}
