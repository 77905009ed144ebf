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

#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thompson/treepair.hpp"

namespace thompson {

/// The disjoint union A_1, B_1, ..., A_k, B_k of the trees of reduced F
/// elements. Vertices are numbered globally in preorder, tree by tree.
class Forest {
   public:
    struct Vertex {
        int tree;
        BinaryWord word;
        int left = -1;
        int right = -1;
        bool is_leaf() const { return left < 0; }
    };

    /// Throws for elements outside F. Non-reduced pairs are reduced first and
    /// reported through `warnings`.
    explicit Forest(const std::vector<TreePair> &pairs, std::vector<std::string> *warnings = nullptr);

    const std::vector<Vertex> &vertices() const { return vertices_; }
    size_t size() const { return vertices_.size(); }
    const std::vector<int> &roots() const { return roots_; }
    /// Leaves of tree t in left-to-right order.
    const std::vector<int> &leaves(int tree) const { return leaves_[static_cast<size_t>(tree)]; }
    size_t tree_count() const { return leaves_.size(); }
    /// Internal vertices, each naming the caret (left, v, right).
    const std::vector<int> &carets() const { return carets_; }

   private:
    std::vector<Vertex> vertices_;
    std::vector<int> roots_;
    std::vector<std::vector<int>> leaves_;
    std::vector<int> carets_;
};

/// Union-find whose representatives are the smallest member index.
class EquivRelation {
   public:
    explicit EquivRelation(size_t n = 0);

    int find(int v) const;
    /// Returns true if two classes were merged.
    bool unite(int a, int b);
    size_t class_count() const { return classes_; }
    size_t size() const { return parent_.size(); }
    /// Representative of every vertex; equal partitions give equal vectors.
    std::vector<int> canonical() const;

    friend bool operator==(const EquivRelation &a, const EquivRelation &b) { return a.canonical() == b.canonical(); }

   private:
    mutable std::vector<int> parent_;
    size_t classes_ = 0;
};

/// Roots together, and the j-th leaves of A_i and B_i together.
EquivRelation initial_relation(const Forest &forest);

/// Coarsens `rel` to the fixpoint of the caret rules:
///   (i)  r ~ s for carets (u0, r, u1), (v0, s, v1) forces u0 ~ v0, u1 ~ v1;
///   (ii) u0 ~ v0 and u1 ~ v1 forces r ~ s.
/// With `rng`, rule applications are made in a random order. `trace`, if
/// given, receives the class count after every merge.
EquivRelation coarsen(const Forest &forest, EquivRelation rel, std::mt19937_64 *rng = nullptr,
                      std::vector<size_t> *trace = nullptr);

/// Classes of the coarsened relation as a rooted graph with 0/1 labelled
/// edges. Classes are numbered in BFS order from the root, 0-edges first.
struct CoreGraph {
    int root = 0;
    /// succ[c][b] is the b-labelled successor of class c, or -1.
    std::vector<std::array<int, 2>> succ;
    size_t size() const { return succ.size(); }

    friend bool operator==(const CoreGraph &, const CoreGraph &) = default;
};

struct CoreResult {
    Forest forest;
    EquivRelation initial;
    EquivRelation final;
    CoreGraph graph;
    std::vector<std::string> warnings;
};

/// Throws Error if the fixpoint is not deterministic (a class with members
/// whose children lie in different classes).
CoreGraph core_graph(const Forest &forest, const EquivRelation &rel);
CoreResult build_core(const std::vector<TreePair> &pairs);
CoreResult build_core(const std::vector<PLMap> &elements);

/// The four-vertex graph: root -0-> A, root -1-> B, A loops on 0, B loops on
/// 1, and both feed a sink looping on 0 and 1.
CoreGraph criterion_graph();
bool is_generation_graph(const CoreGraph &g);

/// digraph with numeric vertex names and label="0"/"1" edges.
std::string to_dot(const CoreGraph &g);

}  // namespace thompson
