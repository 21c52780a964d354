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
#include <filesystem>
#include <iosfwd>
#include <optional>

#include <json.hpp>

#include "qdestruct/verify.hpp"

namespace qdestruct::cli {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInputError = 2 };

/// Loads, runs and reports a scenario. The report goes to `out_path` when
/// given, otherwise to `out`.
int cmd_run(const std::filesystem::path& scenario_path,
            const std::optional<std::filesystem::path>& out_path,
            std::optional<std::uint64_t> sample_seed, std::ostream& out,
            std::ostream& err);

/// Runs the property suite and prints its JSON report.
int cmd_verify(const TrialConfig& config, std::ostream& out, std::ostream& err);

/// Writes example1.json .. example3.json into `dir` and prints what each run
/// should produce.
int cmd_examples(const std::filesystem::path& dir, std::ostream& out,
                 std::ostream& err);

/// Bundled scenario `index` (1, 2 or 3).
nlohmann::json example_scenario(int index);

}  // namespace qdestruct::cli
