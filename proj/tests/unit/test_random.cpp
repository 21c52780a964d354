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
#include <set>

#include <gtest/gtest.h>

#include "qdestruct/random.hpp"

namespace qdestruct {
namespace {

TEST(Rng, SplitMix64ReferenceStream) {
  Rng rng(0);
  EXPECT_EQ(rng.next_u64(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.next_u64(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.next_u64(), 0x06c45d188009454fULL);
}

TEST(Rng, UniformInUnitInterval) {
  Rng rng(1);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(Rng, GaussianMoments) {
  Rng rng(2);
  const int n = 200000;
  double sum = 0.0;
  double sq = 0.0;
  for (int i = 0; i < n; ++i) {
    const double g = rng.gaussian();
    sum += g;
    sq += g * g;
  }
  EXPECT_NEAR(sum / n, 0.0, 0.01);
  EXPECT_NEAR(sq / n, 1.0, 0.01);

  double csq = 0.0;
  for (int i = 0; i < n; ++i) csq += std::norm(rng.complex_gaussian());
  EXPECT_NEAR(csq / n, 1.0, 0.01);
}

TEST(Rng, UniformIntCoversRange) {
  Rng rng(3);
  std::set<std::size_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const std::size_t k = rng.uniform_int(2, 5);
    ASSERT_GE(k, 2u);
    ASSERT_LE(k, 5u);
    seen.insert(k);
  }
  EXPECT_EQ(seen.size(), 4u);
  EXPECT_THROW(rng.uniform_int(3, 2), std::invalid_argument);
}

TEST(DeriveSeed, SeparatesPropertiesAndTrials) {
  std::set<std::uint64_t> seeds;
  for (const char* property : {"a", "b", "kraus.one.d2"}) {
    for (std::uint64_t t = 0; t < 100; ++t) seeds.insert(derive_seed(42, property, t));
  }
  EXPECT_EQ(seeds.size(), 300u);
  EXPECT_EQ(derive_seed(42, "a", 7), derive_seed(42, "a", 7));
  EXPECT_NE(derive_seed(42, "a", 7), derive_seed(43, "a", 7));
}

TEST(RandomDensity, ScalarForDimensionOne) {
  const DensityMatrix rho = random_density(1, 99);
  EXPECT_EQ(rho.matrix()(0, 0), Complex(1.0));
}

TEST(RandomDensity, DeterministicAndCertified) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const std::size_t d = 1 + seed % 6;
    const DensityMatrix a = random_density(d, seed);
    const DensityMatrix b = random_density(d, seed);
    EXPECT_EQ(a.matrix(), b.matrix());
    EXPECT_TRUE(a.satisfies(Tolerances{}));
    EXPECT_GT(hermitian_eigenvalues(a.matrix()).minCoeff(), 0.0);  // full rank
  }
  EXPECT_THROW(random_density(0, 1), std::invalid_argument);
}

TEST(RandomUnitary, IsUnitary) {
  Rng rng(7);
  for (std::size_t d = 1; d <= 5; ++d) {
    const Matrix u = random_unitary(d, rng);
    const auto n = static_cast<Eigen::Index>(d);
    EXPECT_LE(max_abs(u.adjoint() * u - Matrix::Identity(n, n)), 1e-13);
  }
}

TEST(RandomProjector, RankWithinRange) {
  Rng rng(8);
  for (int i = 0; i < 200; ++i) {
    const Projector p = random_projector(4, rng, 1, 3);
    EXPECT_GE(p.rank(), 1);
    EXPECT_LE(p.rank(), 3);
  }
  EXPECT_EQ(random_projector(3, rng, 0, 0).rank(), 0);
  EXPECT_EQ(random_projector(3, rng, 3, 3).rank(), 3);
  EXPECT_THROW(random_projector(3, rng, 2, 4), std::invalid_argument);
}

}  // namespace
}  // namespace qdestruct
