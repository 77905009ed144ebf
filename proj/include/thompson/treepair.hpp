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

#include <string>
#include <string_view>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

/// A finite word over {0, 1}. The empty word names [0, 1]; appending 0 or 1
/// selects the left or right half.
class BinaryWord {
   public:
    BinaryWord() = default;
    explicit BinaryWord(std::string bits);

    const std::string &bits() const { return bits_; }
    size_t size() const { return bits_.size(); }
    bool empty() const { return bits_.empty(); }
    BinaryWord child(int bit) const { return BinaryWord(bits_ + static_cast<char>('0' + bit)); }
    BinaryWord parent() const { return BinaryWord(bits_.substr(0, bits_.size() - 1)); }
    bool is_prefix_of(const BinaryWord &other) const { return other.bits_.starts_with(bits_); }

    Dyadic left() const;
    Dyadic right() const;
    /// The word of the standard dyadic interval [left, left + 2^-depth].
    static BinaryWord from_interval(const Dyadic &left, uint32_t depth);

    /// "e" for the empty word.
    std::string str() const { return bits_.empty() ? "e" : bits_; }

    friend auto operator<=>(const BinaryWord &, const BinaryWord &) = default;

   private:
    std::string bits_;
};

/// A finite rooted binary tree, stored as its leaves in left-to-right order.
class Tree {
   public:
    Tree() : leaves_{BinaryWord()} {}
    /// Leaves must form a complete antichain, given in any order.
    explicit Tree(std::vector<BinaryWord> leaves);

    const std::vector<BinaryWord> &leaves() const { return leaves_; }
    size_t leaf_count() const { return leaves_.size(); }
    /// Internal nodes and leaves, in preorder.
    std::vector<BinaryWord> vertices() const;
    /// True iff both children of `w` are leaves.
    bool is_exposed_caret(const BinaryWord &w) const;

    friend bool operator==(const Tree &, const Tree &) = default;

   private:
    std::vector<BinaryWord> leaves_;
};

/// True iff the words are the leaves of a finite rooted binary tree.
bool is_complete_antichain(std::vector<BinaryWord> words);

/// A tree pair with cyclic leaf matching: domain leaf i maps to range leaf
/// (i + offset) mod n. Offset 0 is an element of F.
class TreePair {
   public:
    TreePair() = default;
    TreePair(Tree domain, Tree range, size_t offset);

    const Tree &domain() const { return domain_; }
    const Tree &range() const { return range_; }
    size_t offset() const { return offset_; }
    size_t leaf_count() const { return domain_.leaf_count(); }
    /// The range leaf matched with domain leaf i.
    const BinaryWord &image_of_leaf(size_t i) const;

    bool is_reduced() const;
    /// "(u1,...,un) -> (v1,...,vn)" with images listed in matching order.
    std::string str() const;

    friend bool operator==(const TreePair &, const TreePair &) = default;

   private:
    Tree domain_;
    Tree range_;
    size_t offset_ = 0;
};

/// Parses "(u1,...,un) -> (v1,...,vn)". Words are [01]+ or "e"; "()" is the
/// single empty word. The domain list may be any rotation of its sorted
/// order; the image list must then be a rotation of a sorted antichain.
TreePair parse_element(std::string_view text);

/// Cancels matched exposed carets until none remain.
TreePair reduce(const TreePair &tp);

/// The map sending each domain leaf interval affinely onto its image.
/// Offset 0 gives an Interval map, anything else a Circle map.
PLMap to_plmap(const TreePair &tp);
/// The reduced tree pair of a map.
TreePair from_plmap(const PLMap &f);

std::ostream &operator<<(std::ostream &out, const TreePair &tp);

}  // namespace thompson
