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

#include <optional>
#include <string_view>
#include <vector>

#include "qdestruct/operator.hpp"
#include "qdestruct/space.hpp"
#include "qdestruct/supertrace.hpp"
#include "qdestruct/symmetry.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

enum class Mode { Selection, NoSelection };

std::string_view to_string(Mode mode);

enum class BranchLabel {
  // one particle
  Destroyed,
  Survived,
  // two particles
  NoneDestroyed,   // outcome (i)
  RightDestroyed,  // distinguishable (ii): particle b destroyed, a survives
  LeftDestroyed,   // distinguishable (iii): particle a destroyed, b survives
  OneDestroyed,    // identical (ii): exactly one particle destroyed
  BothDestroyed,   // last outcome: vacuum
};

std::string_view to_string(BranchLabel label);

/// One measurement outcome. `state` is present only in selection mode and
/// only when the outcome is possible (probability >= Tolerances::probability).
struct Branch {
  BranchLabel label;
  std::optional<SectorTag> sector;  // unset for one-particle outcomes
  double probability = 0.0;
  bool possible = false;
  std::optional<DensityMatrix> state;
};

struct DestructionOutcome {
  Mode mode;
  /// Every outcome with its probability; states attached in selection mode.
  std::vector<Branch> branches;
  /// No-selection mixture; unset in selection mode.
  std::optional<DensityMatrix> mixed;

  double probability_sum() const;
  const Branch& branch(BranchLabel label) const;
};

struct DestructionOptions {
  Tolerances tolerances;
  /// When false, output states carry measured defects without being enforced.
  bool certify = true;
  /// Supertraces used by two-particle maps; nullptr means the standard ones.
  const SupertraceTable* supertraces = nullptr;
};

class SymmetryViolation : public Error {
 public:
  SymmetryViolation(ExchangeSign sign, double violation);
  double violation() const { return violation_; }

 private:
  double violation_;
};

/// One-particle destruction. `rho` lives on H or on H (+) H0; the output is
/// always on H (+) H0. On extended input the vacuum component is left alone.
DestructionOutcome destroy_one(const DensityMatrix& rho, const Projector& pi,
                               Mode mode, const DestructionOptions& opts = {});

/// Two distinguishable particles. `rho` lives on the physical product
/// H_a (x) H_b; the output is on the extended product space of `space`.
DestructionOutcome destroy_two_distinguishable(
    const DensityMatrix& rho, const ProductSpace& space, const Projector& pi_a,
    const Projector& pi_b, Mode mode, const DestructionOptions& opts = {});

/// Two identical particles. `rho` must satisfy the exchange symmetry matching
/// `sign`; otherwise SymmetryViolation is thrown.
DestructionOutcome destroy_two_identical(const DensityMatrix& rho,
                                         const ProductSpace& space,
                                         const Projector& pi, ExchangeSign sign,
                                         Mode mode,
                                         const DestructionOptions& opts = {});

// No-selection maps as plain linear superoperators on the extended space.
// These accept any matrix (not only states) and are what the verification
// harness materializes.

Matrix no_selection_one(const Matrix& x, const ExtendedSpace& space,
                        const Projector& pi);

Matrix no_selection_two_distinguishable(
    const Matrix& x, const ProductSpace& space, const Projector& pi_a,
    const Projector& pi_b,
    const SupertraceTable& maps = SupertraceTable::standard());

Matrix no_selection_two_identical(
    const Matrix& x, const ProductSpace& space, const Projector& pi,
    ExchangeSign sign,
    const SupertraceTable& maps = SupertraceTable::standard());

/// Lifted projector and its complement inside H (+) H0. The lifted projector
/// is zero on the vacuum; its complement is I_ext - lift(Pi), so the vacuum
/// counts as "not selected".
Matrix lift_projector(const Projector& pi, const ExtendedSpace& space);
Matrix lift_complement(const Projector& pi, const ExtendedSpace& space);

}  // namespace qdestruct
