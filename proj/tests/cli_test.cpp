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

#include "thompson/cli.hpp"

#include <sstream>

#include "gtest/gtest.h"
#include "json.hpp"
#include "test_util.hpp"
#include "thompson/groupcalc.hpp"
#include "thompson/repro.hpp"
#include "thompson/serialize.hpp"

using namespace thompson;
using thompson::testing::dy;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun run(const std::vector<std::string> &args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(resolve_element, named_constants_and_powers) {
    EXPECT_EQ(resolve_element("ζ"), standard::zeta());
    EXPECT_EQ(resolve_element("kappa0"), standard::zeta());
    EXPECT_EQ(resolve_element("zeta^2"), power(standard::zeta(), 2));
    EXPECT_EQ(resolve_element("x0^-1"), inverse(standard::x0()));
    EXPECT_EQ(resolve_element("x3"), standard::x(3));
    EXPECT_EQ(resolve_element("torsion-4"), standard::torsion_rep(4));
    EXPECT_EQ(resolve_element(" (00,01,1)->(0,10,11) "), standard::x0());
    EXPECT_EQ(order_of(resolve_element("case-c-alpha-7")).value, 7);
    EXPECT_THROW(resolve_element("nosuch"), ParseError);
    EXPECT_THROW(resolve_element("zeta^x"), ParseError);
    EXPECT_THROW(resolve_element(""), ParseError);
}

TEST(run_cli, element_commands) {
    EXPECT_EQ(run({"eval", "ζ", "1/2"}).out, "5/8\n");
    EXPECT_EQ(run({"compose", "(00,01,10,11)->(0,100,101,11)", "--with-inverse-of-self"}).out, "(e) -> (e)\n");
    EXPECT_EQ(run({"compose", "x0", "x0^-1", "x1"}).out, "(0,100,101,11) -> (0,10,110,111)\n");
    EXPECT_EQ(run({"conjugate", "ζ", "--by", "case-b-alpha"}).out, "(0,100,101,11) -> (0,10,110,111)\n");
    EXPECT_EQ(run({"inverse", "x0"}).out, "(0,10,11) -> (00,01,1)\n");
    EXPECT_EQ(run({"order", "torsion-5"}).out, "5\n");
    EXPECT_EQ(run({"rotation-number", "torsion-5^2"}).out, "2/5\n");
    EXPECT_EQ(run({"support", "zeta"}).out, "{(0, 3/4)}\n");
    EXPECT_EQ(run({"fixed", "zeta"}).out, "{0} u [3/4, 1]\n");
}

TEST(run_cli, canonicalises_element_arguments) {
    EXPECT_EQ(run({"compose", "( 00,01, 10,11 ) -> (0,10,110,111)"}).out, "(00,01,1) -> (0,10,11)\n");
}

TEST(run_cli, exit_codes) {
    CliRun parse = run({"eval", "(0,1->(1,0)", "1/2"});
    EXPECT_EQ(parse.code, kExitParse);
    EXPECT_NE(parse.err.find("position 4"), std::string::npos);
    EXPECT_EQ(run({"eval", "zeta", "1/3"}).code, kExitParse);
    EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
    EXPECT_EQ(run({}).code, kExitParse);
    EXPECT_EQ(run({"eval", "zeta", "3/2"}).code, kExitPrecondition);
    EXPECT_EQ(run({"core", "torsion-3"}).code, kExitPrecondition);
    EXPECT_EQ(run({"factor", "x0", "1/4", "0", "1/2", "1"}).code, kExitPrecondition);
    EXPECT_EQ(run({"order", "zeta", "--output", "dot"}).code, kExitPrecondition);
    EXPECT_EQ(run({"--depth", "0", "generates", "x0"}).code, kExitParse);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(run_cli, core_stages) {
    CliRun r = run({"core", "κ₀", "κ₁", "--stages"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "23 initial classes, 4 final classes");
    EXPECT_EQ(r.out.substr(r.out.find('\n') + 1), to_dot(criterion_graph()));
}

TEST(run_cli, generates) {
    EXPECT_EQ(run({"generates", "k0", "k1"}).out, "yes\nmu = k0\nnu = k1^-1\nxi = k1\nx  = 1/4\n");
    EXPECT_EQ(run({"generates", "x1"}).out, "no (core)\n");
    EXPECT_EQ(run({"generates", "x0", "zeta", "--depth", "1"}).out.substr(0, 20), "unknown (xi-search)\n");
    EXPECT_EQ(run({"generates", "x0", "x1", "--output", "dot"}).out, to_dot(criterion_graph()));
}

TEST(run_cli, json_reports_carry_the_schema) {
    CliRun r = run({"show", "zeta", "--output", "json"});
    ASSERT_EQ(r.code, 0);
    nlohmann::json j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["schema"], kSchemaTag);
    EXPECT_EQ(j["command"], "show");
    EXPECT_EQ(j["result"]["notation"], "(00,01,10,11) -> (0,100,101,11)");
    EXPECT_EQ(j["result"]["breakpoints"][1], nlohmann::json({"1/4", "1/2"}));
    EXPECT_EQ(j["result"]["support"], nlohmann::json::parse(R"([["0", "3/4"]])"));
    EXPECT_EQ(j["result"]["order"], "infinite");
}

TEST(run_cli, repro_is_byte_stable) {
    CliRun a = run({"repro", "all", "--seed", "42", "--output", "json"});
    CliRun b = run({"--seed", "42", "repro", "all", "--output", "json"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    nlohmann::json j = nlohmann::json::parse(a.out);
    EXPECT_EQ(j["result"]["pass"], true);
    EXPECT_EQ(j["result"]["suites"].size(), suite_names().size());
}

TEST(run_cli, repro_rejects_unknown_suites) { EXPECT_EQ(run({"repro", "nosuch"}).code, kExitParse); }

TEST(serialize, element_json) {
    nlohmann::json j = to_json(standard::torsion_rep(2));
    EXPECT_EQ(j["carrier"], "circle");
    EXPECT_EQ(j["notation"], "(0,1) -> (1,0)");
    EXPECT_EQ(j["breakpoints"], nlohmann::json::parse(R"([["0", "1/2"], ["1", "3/2"]])"));
    EXPECT_EQ(to_json(support(standard::torsion_rep(2))), "S1");
    EXPECT_EQ(to_json(fixed_points(PLMap::identity())), "all");
}
