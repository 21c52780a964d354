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

#include "qdestruct/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qdestruct {

namespace {

using Index = Eigen::Index;

constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

void require_product_dim(const Matrix& rho, std::size_t dim) {
  const auto n = static_cast<Index>(dim * dim);
  if (rho.rows() != n || rho.cols() != n) {
    throw DimensionMismatch("expected an operator on H (x) H of dimension " +
                            std::to_string(n));
  }
}

}  // namespace

std::string_view to_string(ExchangeSign sign) {
  return sign == ExchangeSign::Symmetric ? "symmetric" : "antisymmetric";
}

SymmetryReport check_exchange_symmetry(const Matrix& rho, std::size_t dim,
                                       ExchangeSign sign) {
  require_product_dim(rho, dim);
  const double s = sign_value(sign);
  const auto d = static_cast<Index>(dim);
  auto at = [&](Index a, Index b, Index a2, Index b2) {
    return rho(a * d + b, a2 * d + b2);
  };
  double worst = 0.0;
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) {
      for (Index a2 = 0; a2 < d; ++a2) {
        for (Index b2 = 0; b2 < d; ++b2) {
          const Complex v = at(a, b, a2, b2);
          worst = std::max({worst, std::abs(v - s * at(b, a, a2, b2)),
                            std::abs(v - s * at(a, b, b2, a2)),
                            std::abs(v - at(b, a, b2, a2))});
        }
      }
    }
  }
  return SymmetryReport{sign, worst};
}

Matrix swap_operator(std::size_t dim) {
  const auto d = static_cast<Index>(dim);
  Matrix swap = Matrix::Zero(d * d, d * d);
  for (Index a = 0; a < d; ++a) {
    for (Index b = 0; b < d; ++b) swap(b * d + a, a * d + b) = 1.0;
  }
  return swap;
}

double exchange_violation_via_swap(const Matrix& rho, std::size_t dim,
                                   ExchangeSign sign) {
  require_product_dim(rho, dim);
  const Matrix swap = swap_operator(dim);
  const double s = sign_value(sign);
  return std::max({max_abs(rho - s * swap * rho), max_abs(rho - s * rho * swap),
                   max_abs(rho - swap * rho * swap)});
}

Matrix exchange_projector(std::size_t dim, ExchangeSign sign) {
  const auto n = static_cast<Index>(dim * dim);
  return 0.5 * (Matrix::Identity(n, n) + sign_value(sign) * swap_operator(dim));
}

ZeroProjection::ZeroProjection()
    : Error("state has no component in the requested exchange sector") {}

DensityMatrix symmetrize_state(const Matrix& rho, std::size_t dim,
                               ExchangeSign sign, const Tolerances& tol) {
  require_product_dim(rho, dim);
  const Matrix p = exchange_projector(dim, sign);
  Matrix projected = p * rho * p;
  const double weight = projected.trace().real();
  if (!(weight > tol.probability)) throw ZeroProjection();
  projected /= weight;
  return certify_density(std::move(projected), tol);
}

DistinctSpaces::DistinctSpaces()
    : Error("identical-particle operation on distinct left/right spaces") {}

Projector one_particle_sym_projector(const ProductSpace& space) {
  if (!space.same_factors()) throw DistinctSpaces();
  const auto n = static_cast<Index>(space.dim());
  const std::size_t vac = space.left().vacuum_index();
  Matrix pi = Matrix::Zero(n, n);
  for (std::size_t alpha = 0; alpha < space.left().physical_dim(); ++alpha) {
    Vector v = Vector::Zero(n);
    v(static_cast<Index>(space.pair_index(alpha, vac))) = kInvSqrt2;
    v(static_cast<Index>(space.pair_index(vac, alpha))) = kInvSqrt2;
    pi += v * v.adjoint();
  }
  return Projector::from_matrix(std::move(pi));
}

}  // namespace qdestruct
