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
#include <vector>

#include "json.hpp"
#include "thompson/construct.hpp"
#include "thompson/core2.hpp"
#include "thompson/golan.hpp"
#include "thompson/plmap.hpp"

namespace thompson {

/// Version tag carried by every JSON report.
inline constexpr const char *kSchemaTag = "thompson-calc/1";

/// {"notation", "carrier", "breakpoints": [[x, y], ...]} with y the lifted
/// image of x over one period [0, 1].
nlohmann::json to_json(const PLMap &f);
nlohmann::json to_json(const ArcUnion &arcs);
nlohmann::json to_json(const FixedSet &fixed);
nlohmann::json to_json(const CoreGraph &g);
nlohmann::json to_json(const CoreResult &core);
nlohmann::json to_json(const GenVerdict &v, const std::vector<std::string> &names);
nlohmann::json to_json(const std::vector<Check> &checks);

/// Wraps a result with the schema tag and the command name.
nlohmann::json report(const std::string &command, nlohmann::json result);

}  // namespace thompson
