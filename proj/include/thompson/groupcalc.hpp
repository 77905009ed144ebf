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

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thompson/dyadic.hpp"
#include "thompson/plmap.hpp"
#include "thompson/treepair.hpp"

namespace thompson {

namespace standard {

/// (00,01,1) -> (0,10,11)
PLMap x0();
/// (0,100,101,11) -> (0,10,110,111)
PLMap x1();
/// x_n, with x_{n+1} = x_n^{x_0} for n >= 1.
PLMap x(int n);
/// (00,01,10,11) -> (0,100,101,11)
PLMap zeta();
/// The standard element of rotation number 1/n:
///   n = 2: (0,1) -> (1,0)
///   n = 3: (0,10,11) -> (10,11,0)
///   n >= 4: (00,01,10,110,...,1^{n-3}0,1^{n-2}) shifted by one leaf.
PLMap torsion_rep(int n);
TreePair torsion_rep_pair(int n);

}  // namespace standard

/// The subgroups that membership can be tested against. Box variants are
/// pointwise stabilisers of the complement of the open arc (lo, hi).
struct GroupSpec {
    enum class Kind { F, T, FBox, TBox };
    Kind kind = Kind::T;
    Dyadic lo;
    Dyadic hi;

    static GroupSpec F() { return {Kind::F, 0, 1}; }
    static GroupSpec T() { return {Kind::T, 0, 1}; }
    static GroupSpec f_box(const Dyadic &lo, const Dyadic &hi);
    static GroupSpec t_box(const CirclePoint &lo, const CirclePoint &hi);
};

bool is_member(const PLMap &f, const GroupSpec &group);

struct OrderResult {
    enum class Kind { Finite, Infinite, Unknown };
    Kind kind;
    /// The order when Finite; the exhausted bound when Unknown.
    int64_t value;

    friend bool operator==(const OrderResult &, const OrderResult &) = default;
    std::string str() const;
};

inline constexpr int64_t kDefaultOrderBound = 4096;

/// Exact order of f, Infinite, or Unknown(bound). Any non-identity element
/// with a fixed point, or whose power returning a point home is not the
/// identity, has infinite order.
OrderResult order_of(const PLMap &f, int64_t bound = kDefaultOrderBound);

/// A rotation number k/n in lowest terms, 0 <= k < n.
struct Fraction {
    int64_t num;
    int64_t den;
    friend bool operator==(const Fraction &, const Fraction &) = default;
    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Rotation number of an element with a fixed point (0) or of finite order;
/// nullopt when neither is established within `bound`. The orbit seed is the smallest breakpoint.
std::optional<Fraction> rotation_number(const PLMap &f, int64_t bound = kDefaultOrderBound);

/// p, pf, ..., pf^k with the open arcs (pf^i, pf^{i+1}) pairwise disjoint.
struct HopCertificate {
    CirclePoint base;
    int k;
    std::vector<CirclePoint> orbit;
};

struct HopResult {
    std::optional<HopCertificate> certificate;
    /// First overlapping pair (i, j), i < j, when there is no certificate.
    int first = -1;
    int second = -1;
    explicit operator bool() const { return certificate.has_value(); }
};

/// Checks whether f admits k hops at p. Throws if p is fixed by f.
HopResult admits_hops(const PLMap &f, const CirclePoint &p, int k);

/// gamma written as a product of an element alpha of F_[a,c] and an element
/// beta of F_[b,d]. When b gamma^-1 > b the construction is run on gamma^-1
/// and the factors come out in the order beta, alpha.
struct Factorisation {
    PLMap alpha;
    PLMap beta;
    bool beta_first = false;
    PLMap product() const;
};

Factorisation factor_over_cover(const PLMap &gamma, const Dyadic &a, const Dyadic &b, const Dyadic &c,
                                const Dyadic &d);

/// Thompson-like map (0, 1) -> (lo, hi) (counterclockwise arc). With `mid`,
/// 1/2 is sent to mid and each half is mapped canonically.
PLFragment box_conjugator(const CirclePoint &lo, const CirclePoint &hi,
                          const std::optional<CirclePoint> &mid = std::nullopt);

/// Conjugates of elements of F into T_[lo,hi] by box_conjugator.
std::vector<PLMap> box_generators(const CirclePoint &lo, const CirclePoint &hi, const std::vector<PLMap> &base,
                                  const std::optional<CirclePoint> &mid = std::nullopt);

/// Uniform draw from [0, n) that is reproducible across standard libraries.
uint64_t draw(std::mt19937_64 &rng, uint64_t n);

/// A random tree pair with `leaves` leaves in each tree, grown by splitting
/// uniformly chosen leaves. Circle elements get a uniform cyclic offset.
/// The result is reduced.
TreePair random_tree_pair(std::mt19937_64 &rng, int leaves, Carrier carrier);
PLMap random_element(std::mt19937_64 &rng, int leaves, Carrier carrier);

}  // namespace thompson
