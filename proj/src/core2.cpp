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

#include "thompson/core2.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace thompson {

Forest::Forest(const std::vector<TreePair> &pairs, std::vector<std::string> *warnings) {
    int tree = 0;
    for (const TreePair &given : pairs) {
        if (given.offset() != 0) {
            throw PreconditionError("core: " + given.str() + " is not an element of F");
        }
        TreePair tp = given;
        if (!tp.is_reduced()) {
            tp = reduce(tp);
            if (warnings) {
                warnings->push_back("reduced " + given.str() + " to " + tp.str());
            }
        }
        for (const Tree *t : {&tp.domain(), &tp.range()}) {
            std::vector<BinaryWord> words = t->vertices();
            std::map<BinaryWord, int> index;
            int base = static_cast<int>(vertices_.size());
            for (size_t i = 0; i < words.size(); i++) {
                index[words[i]] = base + static_cast<int>(i);
                vertices_.push_back(Vertex{tree, words[i]});
            }
            for (size_t i = 0; i < words.size(); i++) {
                auto l = index.find(words[i].child(0));
                if (l != index.end()) {
                    Vertex &v = vertices_[static_cast<size_t>(base) + i];
                    v.left = l->second;
                    v.right = index.at(words[i].child(1));
                    carets_.push_back(base + static_cast<int>(i));
                }
            }
            roots_.push_back(base);
            std::vector<int> leaves;
            for (const BinaryWord &w : t->leaves()) {
                leaves.push_back(index.at(w));
            }
            leaves_.push_back(std::move(leaves));
            tree++;
        }
    }
}

EquivRelation::EquivRelation(size_t n) : parent_(n), classes_(n) {
    for (size_t i = 0; i < n; i++) {
        parent_[i] = static_cast<int>(i);
    }
}

int EquivRelation::find(int v) const {
    int root = v;
    while (parent_[static_cast<size_t>(root)] != root) {
        root = parent_[static_cast<size_t>(root)];
    }
    while (parent_[static_cast<size_t>(v)] != root) {
        int next = parent_[static_cast<size_t>(v)];
        parent_[static_cast<size_t>(v)] = root;
        v = next;
    }
    return root;
}

bool EquivRelation::unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) {
        return false;
    }
    if (b < a) {
        std::swap(a, b);
    }
    parent_[static_cast<size_t>(b)] = a;
    classes_--;
    return true;
}

std::vector<int> EquivRelation::canonical() const {
    std::vector<int> out(parent_.size());
    for (size_t i = 0; i < parent_.size(); i++) {
        out[i] = find(static_cast<int>(i));
    }
    return out;
}

EquivRelation initial_relation(const Forest &forest) {
    EquivRelation rel(forest.size());
    for (int r : forest.roots()) {
        rel.unite(forest.roots().front(), r);
    }
    for (size_t t = 0; t + 1 < forest.tree_count(); t += 2) {
        const auto &a = forest.leaves(static_cast<int>(t));
        const auto &b = forest.leaves(static_cast<int>(t) + 1);
        for (size_t j = 0; j < a.size(); j++) {
            rel.unite(a[j], b[j]);
        }
    }
    return rel;
}

namespace {

bool unite_traced(EquivRelation &rel, int a, int b, std::vector<size_t> *trace) {
    if (!rel.unite(a, b)) {
        return false;
    }
    if (trace) {
        trace->push_back(rel.class_count());
    }
    return true;
}

// One application of rule (i) or (ii) to the carets r and s.
bool apply_rule(const Forest &forest, EquivRelation &rel, int r, int s, int rule, std::vector<size_t> *trace) {
    const auto &u = forest.vertices()[static_cast<size_t>(r)];
    const auto &v = forest.vertices()[static_cast<size_t>(s)];
    if (rule == 0) {
        if (rel.find(r) != rel.find(s)) {
            return false;
        }
        bool changed = unite_traced(rel, u.left, v.left, trace);
        return unite_traced(rel, u.right, v.right, trace) || changed;
    }
    if (rel.find(u.left) == rel.find(v.left) && rel.find(u.right) == rel.find(v.right)) {
        return unite_traced(rel, r, s, trace);
    }
    return false;
}

}  // namespace

EquivRelation coarsen(const Forest &forest, EquivRelation rel, std::mt19937_64 *rng, std::vector<size_t> *trace) {
    const std::vector<int> &carets = forest.carets();
    if (rng) {
        std::vector<std::array<int, 3>> moves;
        for (size_t i = 0; i < carets.size(); i++) {
            for (size_t j = i + 1; j < carets.size(); j++) {
                moves.push_back({carets[i], carets[j], 0});
                moves.push_back({carets[i], carets[j], 1});
            }
        }
        bool changed = true;
        while (changed) {
            changed = false;
            std::shuffle(moves.begin(), moves.end(), *rng);
            for (const auto &[r, s, rule] : moves) {
                changed = apply_rule(forest, rel, r, s, rule, trace) || changed;
            }
        }
        return rel;
    }
    bool changed = true;
    while (changed) {
        changed = false;
        // Rule (i): carets with related roots have related children.
        std::map<int, int> first_by_root;
        for (int c : carets) {
            auto [it, fresh] = first_by_root.emplace(rel.find(c), c);
            if (!fresh) {
                changed = apply_rule(forest, rel, it->second, c, 0, trace) || changed;
            }
        }
        // Rule (ii): carets with related children have related roots.
        std::map<std::pair<int, int>, int> first_by_children;
        for (int c : carets) {
            const auto &v = forest.vertices()[static_cast<size_t>(c)];
            auto [it, fresh] = first_by_children.emplace(std::make_pair(rel.find(v.left), rel.find(v.right)), c);
            if (!fresh) {
                changed = apply_rule(forest, rel, it->second, c, 1, trace) || changed;
            }
        }
    }
    return rel;
}

CoreGraph core_graph(const Forest &forest, const EquivRelation &rel) {
    std::map<int, std::array<int, 2>> succ;
    for (size_t i = 0; i < forest.size(); i++) {
        const auto &v = forest.vertices()[i];
        int cls = rel.find(static_cast<int>(i));
        auto [it, fresh] = succ.emplace(cls, std::array<int, 2>{-1, -1});
        if (v.is_leaf()) {
            continue;
        }
        std::array<int, 2> kids{rel.find(v.left), rel.find(v.right)};
        for (int b = 0; b < 2; b++) {
            if (it->second[static_cast<size_t>(b)] < 0) {
                it->second[static_cast<size_t>(b)] = kids[static_cast<size_t>(b)];
            } else if (it->second[static_cast<size_t>(b)] != kids[static_cast<size_t>(b)]) {
                throw Error("core: relation is not deterministic at class of vertex " + std::to_string(i) +
                            " (label " + std::to_string(b) + ")");
            }
        }
    }
    int root = rel.find(forest.roots().front());
    std::map<int, int> rename;
    std::deque<int> queue{root};
    rename[root] = 0;
    while (!queue.empty()) {
        int c = queue.front();
        queue.pop_front();
        for (int next : succ.at(c)) {
            if (next >= 0 && rename.emplace(next, static_cast<int>(rename.size())).second) {
                queue.push_back(next);
            }
        }
    }
    CoreGraph g;
    g.succ.assign(rename.size(), {-1, -1});
    for (const auto &[cls, id] : rename) {
        for (size_t b = 0; b < 2; b++) {
            int next = succ.at(cls)[b];
            g.succ[static_cast<size_t>(id)][b] = next < 0 ? -1 : rename.at(next);
        }
    }
    return g;
}

CoreResult build_core(const std::vector<TreePair> &pairs) {
    if (pairs.empty()) {
        throw PreconditionError("core: no elements given");
    }
    std::vector<std::string> warnings;
    Forest forest(pairs, &warnings);
    EquivRelation initial = initial_relation(forest);
    EquivRelation final = coarsen(forest, initial);
    CoreGraph graph = core_graph(forest, final);
    return CoreResult{std::move(forest), std::move(initial), std::move(final), std::move(graph), std::move(warnings)};
}

CoreResult build_core(const std::vector<PLMap> &elements) {
    std::vector<TreePair> pairs;
    for (const PLMap &f : elements) {
        if (!f.fixes_zero()) {
            throw PreconditionError("core: element does not fix 0, so it is not in F");
        }
        pairs.push_back(from_plmap(f));
    }
    return build_core(pairs);
}

CoreGraph criterion_graph() {
    CoreGraph g;
    g.succ = {{1, 2}, {1, 3}, {3, 2}, {3, 3}};
    return g;
}

bool is_generation_graph(const CoreGraph &g) { return g == criterion_graph(); }

std::string to_dot(const CoreGraph &g) {
    std::ostringstream out;
    out << "digraph core {\n";
    for (size_t c = 0; c < g.size(); c++) {
        out << "  " << c << ";\n";
    }
    for (size_t c = 0; c < g.size(); c++) {
        for (size_t b = 0; b < 2; b++) {
            if (g.succ[c][b] >= 0) {
                out << "  " << c << " -> " << g.succ[c][b] << " [label=\"" << b << "\"];\n";
            }
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace thompson
