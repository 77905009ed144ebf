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
#include <optional>
#include <string>
#include <vector>

#include "thompson/core2.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

/// (log2 f'(0+), log2 f'(1-)) for f in F.
struct GermVector {
    int64_t at_zero = 0;
    int64_t at_one = 0;
    friend bool operator==(const GermVector &, const GermVector &) = default;
};

GermVector germ_vector(const PLMap &f);

/// A subgroup of Z^2 in Hermite normal form: basis rows (a, b) and (0, d)
/// with a >= 0, d >= 0, and 0 <= b < d whenever a > 0 and d > 0.
class Lattice2 {
   public:
    explicit Lattice2(const std::vector<GermVector> &gens);
    bool contains(int64_t x, int64_t y) const;
    std::string str() const;

   private:
    int64_t a_ = 0, b_ = 0, d_ = 0;
};

struct LatticeCheck {
    bool has_10 = false;
    bool has_01 = false;
    std::string basis;
};

LatticeCheck germ_lattice_check(const std::vector<PLMap> &gens);

/// A word in the generators: (index, +1 or -1) letters, applied left to right.
using Word = std::vector<std::pair<size_t, int>>;

std::string word_str(const Word &w, const std::vector<std::string> &names);
PLMap evaluate(const Word &w, const std::vector<PLMap> &gens);

struct Witnesses {
    std::optional<Word> mu;
    std::optional<Word> nu;
    std::optional<Word> xi;
    std::optional<Dyadic> x;
    bool complete() const { return mu && nu && xi; }
};

inline constexpr int kDefaultSearchDepth = 8;

/// Breadth-first search over freely reduced words of length <= depth, the
/// letters ordered g0, g0^-1, g1, g1^-1, ... First hits are returned:
///   mu: germs (1, 0); nu: germs (0, 1);
///   xi: a fixed dyadic x in (0, 1) with log2 slopes 0 on the left, 1 on the right.
/// Searches for mu or nu are skipped when the germ lattice rules them out.
Witnesses find_witnesses(const std::vector<PLMap> &gens, int depth = kDefaultSearchDepth);

/// True iff x in (0, 1) is fixed by xi with xi'(x-) = 1 and xi'(x+) = 2.
bool is_xi_point(const PLMap &xi, const Dyadic &x);

struct GenVerdict {
    enum class Kind { Yes, No, Unknown };
    Kind verdict = Kind::Unknown;
    Witnesses witnesses;
    /// "lattice", "core" or "xi-search" when the verdict is not Yes.
    std::string failed_condition;
    LatticeCheck lattice;
    std::optional<CoreGraph> core;
};

const char *verdict_name(GenVerdict::Kind k);

GenVerdict generates_F(const std::vector<PLMap> &gens, int depth = kDefaultSearchDepth);

}  // namespace thompson
