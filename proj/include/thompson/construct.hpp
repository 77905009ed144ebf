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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "thompson/groupcalc.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

/// Input to the conjugator builder. mu and nu must admit k + 3 hops at p
/// and q, and q nu^{k+1} < r < s < q must hold circularly.
struct ConjugatorSpec {
    PLMap mu = PLMap::identity();
    PLMap nu = PLMap::identity();
    int k = 1;
    CirclePoint p;
    CirclePoint q;
    CirclePoint r;
    CirclePoint s;
};

struct ConjugatorCheck {
    /// mu^gamma equals nu on [q, q nu^k].
    bool restriction = false;
    /// q nu^{k+1} < r < s < r mu^gamma < s mu^gamma < q circularly.
    bool chain = false;
    bool ok() const { return restriction && chain; }
};

/// gamma in T such that mu^gamma agrees with nu on [q, q nu^k] and the arc
/// [r, s] is pushed by mu^gamma into (s, q). Every free choice is filled by
/// the canonical Thompson-like map. Throws PreconditionError on bad input
/// and Error if a postcondition fails.
PLMap construct_conjugator(const ConjugatorSpec &spec);
ConjugatorCheck check_conjugator(const ConjugatorSpec &spec, const PLMap &gamma);

/// Least n <= bound with alpha^n having a fixed point.
struct PowerSearchResult {
    int64_t n;
    PLMap power = PLMap::identity();
};
std::optional<PowerSearchResult> power_search(const PLMap &alpha, int64_t bound = kDefaultOrderBound);

/// One checked identity of a construction.
struct Check {
    std::string name;
    bool pass = false;
    std::string detail;
};

bool all_pass(const std::vector<Check> &checks);

/// Everything built while producing gamma with <alpha, zeta^gamma> = T for
/// infinite-order alpha and zeta, together with the identities verified on
/// the way. a_i = a alpha^i, b_i = a beta^i.
struct PipelineState {
    PLMap alpha = PLMap::identity();
    PLMap zeta = PLMap::identity();
    /// alpha was replaced by its inverse so that it moves a forwards.
    bool alpha_inverted = false;
    CirclePoint a;
    /// Endpoints of the support component of alpha containing a.
    Rational c;
    Rational d;
    std::map<int, CirclePoint> a_pts;
    std::map<int, CirclePoint> b_pts;
    PLFragment tau{{0, 1}, {0, 1}};
    PLMap x0_tau = PLMap::identity();
    PLMap x1_tau = PLMap::identity();
    PLMap beta = PLMap::identity();
    /// Point where zeta admits 18 hops.
    CirclePoint zeta_base;
    CirclePoint r;
    CirclePoint s;
    PLMap gamma = PLMap::identity();
    PLMap zeta_gamma = PLMap::identity();
    PLMap eta = PLMap::identity();
    PLMap mu0 = PLMap::identity();
    PLMap mu1 = PLMap::identity();
    CirclePoint cover_p;
    CirclePoint cover_q;
    /// The 22 conjugators (alpha^i for -10 <= i <= 9, then the two others).
    std::vector<PLMap> cover;
    std::vector<std::string> cover_names;
    std::vector<Check> checks;
};

/// Hop count used by the pipeline for both alpha and zeta.
inline constexpr int kPipelineHops = 18;

/// Runs the construction. `a` and `zeta_base` are chosen automatically when
/// absent. Throws PreconditionError when alpha or zeta has finite order,
/// alpha has no fixed point, or no usable base point exists. Identity
/// failures are recorded in `checks`, not thrown.
PipelineState prop_infinite_pipeline(const PLMap &alpha, const PLMap &zeta,
                                     const std::optional<CirclePoint> &a = std::nullopt,
                                     const std::optional<CirclePoint> &zeta_base = std::nullopt);

/// The data of the finite-order cases: alpha is the standard torsion element
/// (rotation number 1/2, 1/3 or 1/p), kappa0 = zeta, and kappa1 is
/// zeta^{(alpha zeta)^2} in case a and zeta^alpha otherwise. Case c also
/// carries tau: [0, 7/8] -> [0, 1] and the transported kappas.
struct FiniteCase {
    char tag = 'a';
    int p = 2;
    PLMap alpha = PLMap::identity();
    PLMap kappa0 = PLMap::identity();
    PLMap kappa1 = PLMap::identity();
    std::optional<PLFragment> tau;
    std::optional<PLMap> kappa0_tau;
    std::optional<PLMap> kappa1_tau;
};

FiniteCase prop_finite_data(char tag, int p = 5);

/// The map x -> x on [0, 3/4], x -> 2x - 3/4 on [3/4, 7/8].
PLFragment case_c_tau();

bool is_prime(int p);

}  // namespace thompson
