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

#include "qdestruct/random.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qdestruct {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t Rng::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double Rng::uniform() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double Rng::gaussian() {
  if (spare_) {
    const double v = *spare_;
    spare_.reset();
    return v;
  }
  const double u1 = 1.0 - uniform();  // (0, 1]
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = 2.0 * std::numbers::pi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

Complex Rng::complex_gaussian() {
  const double re = gaussian();
  const double im = gaussian();
  return Complex(re, im) / std::numbers::sqrt2;
}

std::size_t Rng::uniform_int(std::size_t lo, std::size_t hi) {
  if (hi < lo) throw std::invalid_argument("uniform_int: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::size_t>(uniform() * static_cast<double>(span));
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view property,
                          std::uint64_t trial) {
  return mix64(mix64(master ^ fnv1a64(property)) + trial * kGolden);
}

Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  Matrix g(rows, cols);
  // Row-major fill order is part of the reproducibility contract.
  for (Eigen::Index i = 0; i < rows; ++i) {
    for (Eigen::Index j = 0; j < cols; ++j) g(i, j) = rng.complex_gaussian();
  }
  return g;
}

Matrix random_unitary(std::size_t dim, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(dim);
  Eigen::HouseholderQR<Matrix> qr(random_gaussian_matrix(n, n, rng));
  return qr.householderQ() * Matrix::Identity(n, n);
}

DensityMatrix random_density(std::size_t dim, Rng& rng) {
  if (dim == 0) throw std::invalid_argument("random_density: dim must be >= 1");
  const auto n = static_cast<Eigen::Index>(dim);
  const Matrix g = random_gaussian_matrix(n, n, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace().real();
  return certify_density(std::move(rho));
}

DensityMatrix random_density(std::size_t dim, std::uint64_t seed) {
  Rng rng(seed);
  return random_density(dim, rng);
}

DensityMatrix random_symmetric_density(std::size_t dim, ExchangeSign sign,
                                       Rng& rng) {
  if (dim < 2) {
    throw std::invalid_argument("random_symmetric_density: dim must be >= 2");
  }
  const DensityMatrix base = random_density(dim * dim, rng);
  return symmetrize_state(base.matrix(), dim, sign);
}

DensityMatrix random_symmetric_density(std::size_t dim, ExchangeSign sign,
                                       std::uint64_t seed) {
  Rng rng(seed);
  return random_symmetric_density(dim, sign, rng);
}

Projector random_projector(std::size_t dim, Rng& rng, std::size_t min_rank,
                           std::size_t max_rank) {
  if (max_rank > dim || min_rank > max_rank) {
    throw std::invalid_argument("random_projector: bad rank range");
  }
  const std::size_t rank = rng.uniform_int(min_rank, max_rank);
  const auto n = static_cast<Eigen::Index>(dim);
  if (rank == 0) return Projector::zero(n);
  const Matrix u = random_unitary(dim, rng);
  const auto cols = u.leftCols(static_cast<Eigen::Index>(rank));
  return Projector::from_matrix(cols * cols.adjoint());
}

}  // namespace qdestruct
