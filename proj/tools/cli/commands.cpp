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

#include "cli/commands.hpp"

#include <fstream>
#include <ostream>
#include <stdexcept>

#include "cli/report.hpp"
#include "cli/scenario.hpp"

namespace qdestruct::cli {

using nlohmann::json;

namespace {

json complex_entry(double re, double im = 0.0) { return json::array({re, im}); }

const char* kSummaries[] = {
    "one spin-1/2 particle, w = 0.25, c = 0, no selection: output "
    "diag(up 0, down 0.75, vac 0.25); entropy 0.562335 before and after",
    "spin-1 (x) spin-0, w1 = 0.5, w2 = 0.3, no selection: weight 0.5 on "
    "(m=+1,vac), 0.3 on (m=-1,vac), 0.2 on (vac,vac); the c2 coherence "
    "between the two surviving cells is kept",
    "fermionic singlet, window S3 = +1/2, no selection: pure state "
    "(|down,vac> + |vac,down>)/sqrt(2) with probability 1; entropy 0 before "
    "and after",
};

}  // namespace

json example_scenario(int index) {
  switch (index) {
    case 1:
      return {
          {"system", "one_particle"},
          {"dims", json::array({2})},
          {"labels", json::array({json::array({"up", "down"})})},
          {"state",
           {{complex_entry(0.25), complex_entry(0.0)},
            {complex_entry(0.0), complex_entry(0.75)}}},
          {"observable", {{"diagonal", json::array({0.5, -0.5})}}},
          {"omega", json::array({0.5})},
          {"mode", "no_selection"},
      };
    case 2:
      return {
          {"system", "two_distinguishable"},
          {"dims", json::array({3, 1})},
          {"labels", json::array({json::array({"m=+1", "m=0", "m=-1"}),
                                json::array({"m=0"})})},
          {"state",
           {{complex_entry(0.5), complex_entry(0.1), complex_entry(0.05)},
            {complex_entry(0.1), complex_entry(0.2), complex_entry(0.0, 0.1)},
            {complex_entry(0.05), complex_entry(0.0, -0.1),
             complex_entry(0.3)}}},
          {"observable", {{"diagonal", json::array({1.0, 0.0, -1.0})}}},
          {"omega", json::array({0.0})},
          {"observable_b", {{"diagonal", json::array({0.0})}}},
          {"omega_b", json::array({0.0})},
          {"mode", "no_selection"},
      };
    case 3:
      return {
          {"system", "two_identical_antisymmetric"},
          {"dims", json::array({2})},
          {"labels", json::array({json::array({"up", "down"})})},
          {"state", "singlet"},
          {"observable", {{"diagonal", json::array({0.5, -0.5})}}},
          {"omega", json::array({0.5})},
          {"mode", "no_selection"},
      };
    default:
      throw std::out_of_range("example index must be 1, 2 or 3");
  }
}

int cmd_run(const std::filesystem::path& scenario_path,
            const std::optional<std::filesystem::path>& out_path,
            std::optional<std::uint64_t> sample_seed, std::ostream& out,
            std::ostream& err) {
  json report;
  try {
    report = run_report(load_scenario(scenario_path), sample_seed);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const ValidationError& e) {
    err << "invalid scenario: " << e.what() << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "destruction failed: " << e.what() << "\n";
    return kExitFailure;
  }
  if (out_path) {
    std::ofstream file(*out_path);
    if (!(file << report.dump(2) << "\n")) {
      err << "cannot write " << out_path->string() << "\n";
      return kExitInputError;
    }
  } else {
    out << report.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_verify(const TrialConfig& config, std::ostream& out, std::ostream& err) {
  try {
    config.validate();
  } catch (const InvalidConfig& e) {
    err << "invalid configuration: " << e.what() << "\n";
    return kExitInputError;
  }
  const std::vector<PropertyReport> reports = run_suite(config);
  out << suite_report_json(config, reports) << "\n";
  for (const PropertyReport& r : reports) {
    if (!r.passed) {
      err << "FAIL " << r.name << ": max defect " << r.max_defect
          << " > tolerance " << r.tolerance << " (trial " << r.worst_trial
          << ", seed " << r.worst_seed << ")\n";
    }
  }
  return all_passed(reports) ? kExitOk : kExitFailure;
}

int cmd_examples(const std::filesystem::path& dir, std::ostream& out,
                 std::ostream& err) {
  for (int i = 1; i <= 3; ++i) {
    const std::string name = "example" + std::to_string(i) + ".json";
    std::ofstream file(dir / name);
    if (!(file << example_scenario(i).dump(2) << "\n")) {
      err << "cannot write " << (dir / name).string() << "\n";
      return kExitFailure;
    }
    out << name << ": " << kSummaries[i - 1] << "\n";
  }
  return kExitOk;
}

}  // namespace qdestruct::cli
