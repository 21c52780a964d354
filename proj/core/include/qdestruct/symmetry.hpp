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

#include <cstddef>
#include <string_view>

#include "qdestruct/operator.hpp"
#include "qdestruct/space.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

/// +1 for bosons (symmetric states), -1 for fermions (antisymmetric states).
enum class ExchangeSign : int { Symmetric = 1, Antisymmetric = -1 };

inline double sign_value(ExchangeSign s) { return static_cast<int>(s); }

std::string_view to_string(ExchangeSign sign);

struct SymmetryReport {
  ExchangeSign sign;
  /// Largest deviation over all index quadruples of the exchange conditions
  ///   rho_{ab,a'b'} = s rho_{ba,a'b'} = s rho_{ab,b'a'} = rho_{ba,b'a'}.
  double violation = 0.0;

  bool passed(double tol) const { return violation <= tol; }
};

/// Checks the exchange conditions on the coefficient tensor of an operator on
/// the physical product H (x) H, where H has dimension `dim`.
SymmetryReport check_exchange_symmetry(const Matrix& rho, std::size_t dim,
                                       ExchangeSign sign);

/// Same quantity computed through the SWAP operator; used as a cross-check.
double exchange_violation_via_swap(const Matrix& rho, std::size_t dim,
                                   ExchangeSign sign);

/// SWAP on H (x) H: |a> (x) |b>  ->  |b> (x) |a>.
Matrix swap_operator(std::size_t dim);

/// (I + s SWAP) / 2: projector onto the symmetric (s = +1) or antisymmetric
/// (s = -1) subspace.
Matrix exchange_projector(std::size_t dim, ExchangeSign sign);

class ZeroProjection : public Error {
 public:
  ZeroProjection();
};

/// P rho P / Tr(P rho P) with P = exchange_projector(dim, sign).
DensityMatrix symmetrize_state(const Matrix& rho, std::size_t dim,
                               ExchangeSign sign, const Tolerances& tol = {});

class DistinctSpaces : public Error {
 public:
  DistinctSpaces();
};

/// Projector on the extended product space onto
/// span{ (|alpha> (x) |0> + |0> (x) |alpha>) / sqrt(2) }, alpha running over
/// the physical basis. Independent of the exchange sign.
Projector one_particle_sym_projector(const ProductSpace& space);

}  // namespace qdestruct
