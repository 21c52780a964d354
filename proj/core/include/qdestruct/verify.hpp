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
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qdestruct/destruction.hpp"
#include "qdestruct/random.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

enum class SystemKind { One, TwoDistinguishable, TwoSymmetric, TwoAntisymmetric };

std::string_view to_string(SystemKind kind);  // one, two_dist, two_sym, two_antisym
std::optional<SystemKind> system_kind_from_string(std::string_view name);

class InvalidConfig : public Error {
 public:
  using Error::Error;
};

struct TrialConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  std::vector<std::size_t> dims{2, 3, 4};
  std::vector<SystemKind> kinds{SystemKind::One, SystemKind::TwoDistinguishable,
                                SystemKind::TwoSymmetric,
                                SystemKind::TwoAntisymmetric};
  Tolerances tolerances;

  /// Throws InvalidConfig unless trials >= 1, dims non-empty with every
  /// entry >= 2, and kinds non-empty.
  void validate() const;
};

struct PropertyReport {
  std::string name;
  std::size_t trials = 0;
  double max_defect = 0.0;
  double tolerance = 0.0;
  bool passed = true;
  /// Trial index and derived seed of the worst trial, for reproduction.
  std::size_t worst_trial = 0;
  std::uint64_t worst_seed = 0;
};

bool all_passed(const std::vector<PropertyReport>& reports);

/// Matrix of a linear map on dim x dim matrices. Column k holds vec(map(E_k))
/// where E_k = |r><c| with k = r * dim + c; vec is row-major as well.
Matrix materialize_superoperator(
    const std::function<Matrix(const Matrix&)>& map, Eigen::Index dim);

// Property groups. Each validates `config` and returns one report per checked
// quantity; run_suite concatenates all of them.

/// Hermiticity, unit trace, positivity and probability sums of every
/// destruction output, per (system kind, dim).
std::vector<PropertyReport> check_kraus(const TrialConfig& config);
/// Linearity of the no-selection maps on convex combinations, per kind.
std::vector<PropertyReport> check_destruction_linearity(const TrialConfig& config);
/// Left/Right trace preservation; Inner/External diagonal pattern.
std::vector<PropertyReport> check_supertrace_traces(const TrialConfig& config);
/// Left o Right = Right o Left = FullProduct (materialized, dims <= 3) and
/// Inner o External = External o Inner = +/- FullProduct on (anti)symmetric
/// states.
std::vector<PropertyReport> check_composition(const TrialConfig& config);
/// Left/Right outputs of PSD inputs stay PSD, per dim.
std::vector<PropertyReport> check_partial_positivity(const TrialConfig& config);
std::vector<PropertyReport> check_supertrace_linearity(const TrialConfig& config);
/// Identical-particle one-destroyed branch lies in the symmetric
/// one-particle subspace (dims <= 3).
std::vector<PropertyReport> check_irreducibility(const TrialConfig& config);
std::vector<PropertyReport> check_idempotence(const TrialConfig& config);
/// Rank-1 no-selection destruction never lowers entropy; selection branches
/// of the spin-1/2 family are pure.
std::vector<PropertyReport> check_entropy(const TrialConfig& config);
/// No-selection output equals the probability-weighted selection branches.
std::vector<PropertyReport> check_bookkeeping(const TrialConfig& config);
std::vector<PropertyReport> check_symmetry_utilities(const TrialConfig& config);

/// Right supertrace with its delta moved onto the left factor:
/// |a><a'| (x) |b><b'|  ->  delta(a', a) |a><a'| (x) |0><0|.
Matrix corrupted_right_supertrace(const Matrix& op, const ProductSpace& space);

struct MutationReport {
  std::size_t trials = 0;
  std::size_t detected = 0;  // trials whose trace defect exceeded threshold
  double threshold = 1e-3;
  double min_defect = 0.0;

  double detected_fraction() const {
    return trials == 0 ? 0.0 : static_cast<double>(detected) / trials;
  }
};

/// Runs the two-distinguishable-particle trace check with the corrupted Right
/// supertrace. Projectors have rank in [1, d-1] so the corrupted map is
/// always exercised.
MutationReport run_mutation_check(const TrialConfig& config);

/// Every property above plus a report asserting the mutation is detected in
/// at least 95% of trials.
std::vector<PropertyReport> run_suite(const TrialConfig& config);

/// JSON document emitted by `qdestruct verify`.
std::string suite_report_json(const TrialConfig& config,
                              const std::vector<PropertyReport>& reports);

}  // namespace qdestruct
