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

#include "thompson/serialize.hpp"

#include "thompson/treepair.hpp"

namespace thompson {

using nlohmann::json;

json to_json(const PLMap &f) {
    json points = json::array();
    const PLFragment &lift = f.lift();
    for (size_t i = 0; i < lift.xs().size(); i++) {
        points.push_back({lift.xs()[i].str(), lift.ys()[i].str()});
    }
    return {{"notation", from_plmap(f).str()}, {"carrier", carrier_name(f.carrier())}, {"breakpoints", points}};
}

json to_json(const ArcUnion &arcs) {
    if (arcs.is_full_circle()) {
        return "S1";
    }
    json out = json::array();
    for (const OpenArc &a : arcs.arcs()) {
        out.push_back({rational_frac(a.lo).get_str(), a.hi > 1 ? rational_frac(a.hi).get_str() : a.hi.get_str()});
    }
    return out;
}

json to_json(const FixedSet &fixed) {
    if (fixed.everything) {
        return "all";
    }
    json out = json::array();
    for (const FixedComponent &c : fixed.components) {
        out.push_back({c.lo.get_str(), c.hi.get_str()});
    }
    return out;
}

json to_json(const CoreGraph &g) {
    json edges = json::array();
    for (size_t c = 0; c < g.size(); c++) {
        for (size_t b = 0; b < 2; b++) {
            if (g.succ[c][b] >= 0) {
                edges.push_back({{"from", c}, {"to", g.succ[c][b]}, {"label", std::to_string(b)}});
            }
        }
    }
    return {{"vertices", g.size()}, {"root", g.root}, {"edges", edges}};
}

json to_json(const CoreResult &core) {
    return {{"initial_classes", core.initial.class_count()},
            {"final_classes", core.final.class_count()},
            {"graph", to_json(core.graph)},
            {"is_generation_graph", is_generation_graph(core.graph)},
            {"dot", to_dot(core.graph)},
            {"warnings", core.warnings}};
}

json to_json(const GenVerdict &v, const std::vector<std::string> &names) {
    json out{{"verdict", verdict_name(v.verdict)}};
    if (!v.failed_condition.empty()) {
        out["failed_condition"] = v.failed_condition;
    }
    out["lattice"] = {{"basis", v.lattice.basis}, {"has_1_0", v.lattice.has_10}, {"has_0_1", v.lattice.has_01}};
    if (v.core) {
        out["core_dot"] = to_dot(*v.core);
    }
    json w = json::object();
    if (v.witnesses.mu) {
        w["mu"] = word_str(*v.witnesses.mu, names);
    }
    if (v.witnesses.nu) {
        w["nu"] = word_str(*v.witnesses.nu, names);
    }
    if (v.witnesses.xi) {
        w["xi"] = word_str(*v.witnesses.xi, names);
        w["x"] = v.witnesses.x->str();
    }
    out["witnesses"] = w;
    return out;
}

json to_json(const std::vector<Check> &checks) {
    json out = json::array();
    for (const Check &c : checks) {
        json item{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) {
            item["detail"] = c.detail;
        }
        out.push_back(item);
    }
    return out;
}

json report(const std::string &command, json result) {
    return {{"schema", kSchemaTag}, {"command", command}, {"result", std::move(result)}};
}

}  // namespace thompson
