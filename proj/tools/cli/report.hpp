// Copyright 2026 The qdestruct Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/scenario.hpp"

namespace qdestruct::cli {

/// Names of the extended basis vectors the report's matrices are written in.
/// The vacuum is "vac"; two-particle pairs are "left,right".
std::vector<std::string> extended_basis(const Scenario& scenario);

DestructionOutcome run_destruction(const Scenario& scenario);

/// RunReport document: input entropy and defects, every branch with its
/// probability and sector, branch states in selection mode, the mixed output
/// in no-selection mode. With `sample_seed` one outcome is also drawn.
nlohmann::json run_report(const Scenario& scenario,
                          std::optional<std::uint64_t> sample_seed = {});

}  // namespace qdestruct::cli
