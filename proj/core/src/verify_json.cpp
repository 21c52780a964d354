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

#include <cmath>

#include <json.hpp>

#include "qdestruct/verify.hpp"

namespace qdestruct {

std::string suite_report_json(const TrialConfig& config,
                              const std::vector<PropertyReport>& reports) {
  using nlohmann::json;
  json kinds = json::array();
  for (SystemKind k : config.kinds) kinds.push_back(std::string(to_string(k)));
  const Tolerances& tol = config.tolerances;

  json properties = json::array();
  for (const PropertyReport& r : reports) {
    json max_defect = std::isfinite(r.max_defect) ? json(r.max_defect) : json();
    properties.push_back({
        {"name", r.name},
        {"trials", r.trials},
        {"max_defect", max_defect},
        {"tolerance", r.tolerance},
        {"passed", r.passed},
        {"worst_trial", r.worst_trial},
        // Decimal string: 64-bit seeds do not survive IEEE doubles.
        {"worst_seed", std::to_string(r.worst_seed)},
    });
  }

  json doc = {
      {"config",
       {{"seed", std::to_string(config.seed)},
        {"trials", config.trials},
        {"dims", config.dims},
        {"kinds", kinds},
        {"tolerances",
         {{"hermiticity", tol.hermiticity},
          {"trace", tol.trace},
          {"psd", tol.psd},
          {"eigenvalue", tol.eigenvalue},
          {"probability", tol.probability},
          {"symmetry", tol.symmetry}}}}},
      {"all_passed", all_passed(reports)},
      {"properties", properties},
  };
  return doc.dump(2);
}

}  // namespace qdestruct
