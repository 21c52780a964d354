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

#include "cli/report.hpp"

#include "qdestruct/random.hpp"

namespace qdestruct::cli {

using nlohmann::json;

namespace {

constexpr const char* kVacuumLabel = "vac";

json state_json(const DensityMatrix& state, const Tolerances& tol) {
  return {{"matrix", matrix_to_json(state.matrix())},
          {"entropy", von_neumann_entropy(state, tol)},
          {"defects", defects_to_json(state.defects())}};
}

}  // namespace

std::vector<std::string> extended_basis(const Scenario& scenario) {
  auto factor = [](const std::vector<std::string>& labels) {
    std::vector<std::string> out = labels;
    out.push_back(kVacuumLabel);
    return out;
  };
  const std::vector<std::string> left = factor(scenario.labels.at(0));
  if (!scenario.two_particle()) return left;
  const std::vector<std::string> right = factor(scenario.labels.at(1));
  std::vector<std::string> out;
  for (const std::string& a : left) {
    for (const std::string& b : right) out.push_back(a + "," + b);
  }
  return out;
}

DestructionOutcome run_destruction(const Scenario& scenario) {
  const DestructionOptions opts{scenario.tolerances, true, nullptr};
  switch (scenario.system) {
    case SystemType::OneParticle:
      return destroy_one(scenario.state, scenario.pi_a, scenario.mode, opts);
    case SystemType::TwoDistinguishable:
      return destroy_two_distinguishable(scenario.state, scenario.product_space(),
                                         scenario.pi_a, *scenario.pi_b,
                                         scenario.mode, opts);
    case SystemType::TwoIdenticalSymmetric:
    case SystemType::TwoIdenticalAntisymmetric:
      break;
  }
  return destroy_two_identical(scenario.state, scenario.product_space(),
                               scenario.pi_a, *scenario.sign(), scenario.mode,
                               opts);
}

json run_report(const Scenario& scenario,
                std::optional<std::uint64_t> sample_seed) {
  const Tolerances& tol = scenario.tolerances;
  const DestructionOutcome out = run_destruction(scenario);

  json branches = json::array();
  for (const Branch& b : out.branches) {
    branches.push_back({
        {"label", std::string(to_string(b.label))},
        {"sector", b.sector ? json(std::string(to_string(*b.sector))) : json()},
        {"probability", b.probability},
        {"possible", b.possible},
        {"state", b.state ? state_json(*b.state, tol) : json()},
    });
  }

  json report = {
      {"system", std::string(to_string(scenario.system))},
      {"mode", std::string(to_string(scenario.mode))},
      {"dims", scenario.dims},
      {"basis", extended_basis(scenario)},
      {"input",
       {{"entropy", von_neumann_entropy(scenario.state, tol)},
        {"defects", defects_to_json(scenario.state.defects())}}},
      {"probability_sum", out.probability_sum()},
      {"branches", branches},
      {"output", out.mixed ? state_json(*out.mixed, tol) : json()},
  };

  if (sample_seed) {
    Rng rng(*sample_seed);
    const double u = rng.uniform() * out.probability_sum();
    double acc = 0.0;
    const Branch* drawn = nullptr;
    for (const Branch& b : out.branches) {
      if (!b.possible) continue;
      drawn = &b;
      acc += b.probability;
      if (u < acc) break;
    }
    report["sample"] = {{"seed", std::to_string(*sample_seed)},
                        {"label", std::string(to_string(drawn->label))}};
  }
  return report;
}

}  // namespace qdestruct::cli
