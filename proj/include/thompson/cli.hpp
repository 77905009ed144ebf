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
#include <ostream>
#include <string>
#include <vector>

#include "thompson/plmap.hpp"

namespace thompson {

enum class OutputFormat { Text, Json, Dot };

struct CliConfig {
    int search_depth = 8;
    int64_t order_bound = 4096;
    OutputFormat output = OutputFormat::Text;
    uint64_t seed = 42;
};

/// Exit codes of run_cli.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitMismatch = 4;

/// An element given either in tree pair notation or as a named constant,
/// optionally raised to a power with a "^n" suffix: zeta, x0, x7,
/// kappa1, case-b-alpha, case-c-alpha-5, identity, ...
PLMap resolve_element(const std::string &text);

/// Names accepted by resolve_element, one per family.
const std::vector<std::string> &element_names();

/// Runs the command line `args` (without the program name).
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace thompson
