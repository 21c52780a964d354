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
#include <optional>
#include <string_view>

#include "qdestruct/operator.hpp"
#include "qdestruct/symmetry.hpp"
#include "qdestruct/types.hpp"

namespace qdestruct {

/// SplitMix64 stream with Box-Muller normals.
///
/// The stream is fully specified so failure seeds reproduce across
/// implementations:
///   state += 0x9e3779b97f4a7c15; z = state;
///   z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9;
///   z = (z ^ (z >> 27)) * 0x94d049bb133111eb;
///   return z ^ (z >> 31);
/// uniform() uses the top 53 bits; gaussian() draws u1 = 1 - uniform(),
/// u2 = uniform() and returns sqrt(-2 ln u1) cos(2 pi u2), caching the sine
/// partner for the next call.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  double uniform();  // [0, 1)
  double gaussian();
  /// Standard complex normal: (g1 + i g2) / sqrt(2).
  Complex complex_gaussian();
  /// Uniform integer in [lo, hi].
  std::size_t uniform_int(std::size_t lo, std::size_t hi);

 private:
  std::uint64_t state_;
  std::optional<double> spare_;
};

/// SplitMix64 finalizer applied to a single word.
std::uint64_t mix64(std::uint64_t x);

/// Seed of trial `trial` of property `property`:
///   mix64(mix64(master ^ fnv1a64(property)) + trial * 0x9e3779b97f4a7c15)
std::uint64_t derive_seed(std::uint64_t master, std::string_view property,
                          std::uint64_t trial);

Matrix random_gaussian_matrix(Eigen::Index rows, Eigen::Index cols, Rng& rng);

/// Haar-distributed up to column phases (QR of a complex Ginibre matrix).
Matrix random_unitary(std::size_t dim, Rng& rng);

/// G G^dagger / Tr(G G^dagger) with G a dim x dim complex Ginibre matrix.
DensityMatrix random_density(std::size_t dim, Rng& rng);
DensityMatrix random_density(std::size_t dim, std::uint64_t seed);

/// A random density on H (x) H projected onto the (anti)symmetric subspace and
/// renormalized.
DensityMatrix random_symmetric_density(std::size_t dim, ExchangeSign sign,
                                       Rng& rng);
DensityMatrix random_symmetric_density(std::size_t dim, ExchangeSign sign,
                                       std::uint64_t seed);

/// Projector onto the span of `rank` columns of a random unitary, with rank
/// uniform in [min_rank, max_rank].
Projector random_projector(std::size_t dim, Rng& rng, std::size_t min_rank,
                           std::size_t max_rank);

}  // namespace qdestruct
