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

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "thompson/construct.hpp"
#include "thompson/golan.hpp"

namespace thompson {

struct ReproOptions {
    uint64_t seed = 42;
    int depth = kDefaultSearchDepth;
    int conjugator_instances = 100;
    int factorisation_instances = 200;
    int schedules = 20;
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass() const { return all_pass(checks); }
};

/// figures, case-a, case-b, case-c, prop-infinite, presentation, torsion,
/// conjugator, factorisation, coarsening.
const std::vector<std::string> &suite_names();

/// Runs one suite, or every suite for "all". Throws PreconditionError for
/// an unknown name.
std::vector<SuiteReport> run_repro(const std::string &suite, const ReproOptions &options);

/// A random valid conjugator input: mu and nu are conjugates of positive
/// powers of zeta, p and q are the images of 1/8, and r < s are drawn on a
/// 1/64 grid of the arc (q nu^{k+1}, q).
ConjugatorSpec random_conjugator_spec(std::mt19937_64 &rng);

/// A random element of F supported in [a, d] with a < b < c < d on a 1/16
/// grid of [0, 1].
struct FactorInstance {
    PLMap gamma = PLMap::identity();
    Dyadic a, b, c, d;
};
FactorInstance random_factor_instance(std::mt19937_64 &rng);

}  // namespace thompson
