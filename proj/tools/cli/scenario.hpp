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

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cli/json_io.hpp"
#include "qdestruct/destruction.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct::cli {

enum class SystemType {
  OneParticle,
  TwoDistinguishable,
  TwoIdenticalSymmetric,
  TwoIdenticalAntisymmetric,
};

std::string_view to_string(SystemType system);

struct Scenario {
  SystemType system = SystemType::OneParticle;
  /// Physical dimension of each factor; identical systems store it twice.
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::string>> labels;  // one list per factor
  DensityMatrix state;
  Projector pi_a;
  std::optional<Projector> pi_b;  // two_distinguishable only
  Mode mode = Mode::NoSelection;
  Tolerances tolerances;

  bool two_particle() const { return system != SystemType::OneParticle; }
  std::optional<ExchangeSign> sign() const;
  ExtendedSpace one_particle_space() const;
  ProductSpace product_space() const;
};

/// Validates a scenario document. Fields:
///   system      one_particle | two_distinguishable |
///               two_identical_symmetric | two_identical_antisymmetric
///   dims        [d] or [d_a, d_b]; identical systems accept [d] or [d, d]
///   labels      optional basis labels per factor
///   state       matrix or preset: singlet, triplet0, maximally_mixed
///   observable  matrix or {"diagonal": [...]}; omega: selected eigenvalues
///   observable_b, omega_b   second detector, two_distinguishable only
///   mode        selection | no_selection
///   tolerances  optional overrides of the Tolerances fields
/// Throws ValidationError naming the offending field.
Scenario parse_scenario(const nlohmann::json& doc);

/// Reads and validates a scenario file. Throws ParseError for unreadable or
/// malformed JSON.
Scenario load_scenario(const std::filesystem::path& path);

}  // namespace qdestruct::cli
