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

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qdestruct/destruction.hpp"
#include "qdestruct/random.hpp"

namespace qdestruct {
namespace {

using oracle::kron;
using oracle::ket;
using oracle::ketbra;

Matrix diag(std::initializer_list<double> values) {
  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(values.size()),
                          static_cast<Eigen::Index>(values.size()));
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

Projector up() { return Projector::from_matrix(diag({1.0, 0.0})); }

ProductSpace product(std::size_t da, std::size_t db) {
  return ProductSpace(ExtendedSpace(PhysicalSpace(da)),
                      ExtendedSpace(PhysicalSpace(db)));
}

Matrix singlet() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

TEST(DestroyOne, ExampleOneNoSelection) {
  Matrix rho(2, 2);
  rho << 0.25, Complex(0.0, 0.1), Complex(0.0, -0.1), 0.75;
  const DestructionOutcome out =
      destroy_one(certify_density(rho), up(), Mode::NoSelection);
  ASSERT_TRUE(out.mixed.has_value());
  EXPECT_LE(max_abs(out.mixed->matrix() - diag({0.0, 0.75, 0.25})), 1e-15);
  EXPECT_NEAR(out.probability_sum(), 1.0, 1e-15);
}

TEST(DestroyOne, ExampleOneSelection) {
  Matrix rho(2, 2);
  rho << 0.25, 0.0, 0.0, 0.75;
  const DestructionOutcome out =
      destroy_one(certify_density(rho), up(), Mode::Selection);
  EXPECT_FALSE(out.mixed.has_value());
  const Branch& destroyed = out.branch(BranchLabel::Destroyed);
  const Branch& survived = out.branch(BranchLabel::Survived);
  EXPECT_NEAR(destroyed.probability, 0.25, 1e-15);
  EXPECT_NEAR(survived.probability, 0.75, 1e-15);
  EXPECT_LE(max_abs(destroyed.state->matrix() - diag({0.0, 0.0, 1.0})), 1e-15);
  EXPECT_LE(max_abs(survived.state->matrix() - diag({0.0, 1.0, 0.0})), 1e-15);
  EXPECT_EQ(to_string(destroyed.label), "destroyed");
}

TEST(DestroyOne, EmptyWindowLeavesStateAndFullWindowGivesVacuum) {
  const DensityMatrix rho = random_density(3, 5);
  const DestructionOutcome none =
      destroy_one(rho, Projector::zero(3), Mode::Selection);
  EXPECT_FALSE(none.branch(BranchLabel::Destroyed).possible);
  EXPECT_FALSE(none.branch(BranchLabel::Destroyed).state.has_value());
  EXPECT_LE(max_abs(none.branch(BranchLabel::Survived).state->matrix() -
                    oracle::pad(rho.matrix())),
            1e-15);

  const DestructionOutcome all =
      destroy_one(rho, Projector::identity(3), Mode::NoSelection);
  EXPECT_LE(max_abs(all.mixed->matrix() - diag({0.0, 0.0, 0.0, 1.0})), 1e-15);
}

TEST(DestroyOne, IdempotentOnExtendedOutput) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    Rng rng(seed);
    const std::size_t d = 2 + seed % 3;
    const Projector pi = random_projector(d, rng, 0, d);
    const DensityMatrix rho = random_density(d, rng);
    const DensityMatrix once = *destroy_one(rho, pi, Mode::NoSelection).mixed;
    const DensityMatrix twice = *destroy_one(once, pi, Mode::NoSelection).mixed;
    EXPECT_LE(max_abs(twice.matrix() - once.matrix()), 1e-12);
  }
}

TEST(DestroyOne, RankTwoWindowCanLowerEntropy) {
  // The entropy increase holds for rank-1 windows only: maximally mixed qutrit
  // with a rank-2 window collapses two thirds of the weight onto the vacuum.
  const DensityMatrix rho = certify_density(Matrix::Identity(3, 3) / 3.0);
  const Projector pi = Projector::from_matrix(diag({1.0, 1.0, 0.0}));
  const DensityMatrix out = *destroy_one(rho, pi, Mode::NoSelection).mixed;
  const double expected = -(1.0 / 3) * std::log(1.0 / 3) - (2.0 / 3) * std::log(2.0 / 3);
  EXPECT_NEAR(von_neumann_entropy(out), expected, 1e-12);
  EXPECT_LT(von_neumann_entropy(out), von_neumann_entropy(rho));
}

TEST(DestroyOne, DimensionMismatch) {
  EXPECT_THROW(destroy_one(random_density(4, 1), up(), Mode::Selection),
               DimensionMismatch);
}

TEST(DestroyTwoDistinguishable, ExampleTwoKeepsSurvivorCoherence) {
  // Spin-1 (x) spin-0, both detectors select S3 = 0.
  Matrix rho(3, 3);
  const Complex c1(0.1, 0.05), c2(0.08, -0.02), c3(0.0, 0.1);
  rho << 0.5, c1, c2, std::conj(c1), 0.2, c3, std::conj(c2), std::conj(c3), 0.3;
  const ProductSpace space = product(3, 1);
  const Projector pa = Projector::from_matrix(diag({0.0, 1.0, 0.0}));
  const Projector pb = Projector::identity(1);
  const DestructionOutcome out = destroy_two_distinguishable(
      certify_density(rho), space, pa, pb, Mode::NoSelection);

  const Eigen::Index n = 4;  // spin-1 + vacuum
  const Eigen::Index m = 2;  // spin-0 + vacuum
  Matrix expected = 0.5 * kron(ketbra(n, 0, 0), ketbra(m, 1, 1)) +
                    0.3 * kron(ketbra(n, 2, 2), ketbra(m, 1, 1)) +
                    0.2 * kron(ketbra(n, 3, 3), ketbra(m, 1, 1)) +
                    c2 * kron(ketbra(n, 0, 2), ketbra(m, 1, 1)) +
                    std::conj(c2) * kron(ketbra(n, 2, 0), ketbra(m, 1, 1));
  EXPECT_LE(max_abs(out.mixed->matrix() - expected), 1e-15);
  EXPECT_NEAR(out.branch(BranchLabel::NoneDestroyed).probability, 0.0, 1e-15);
  EXPECT_NEAR(out.branch(BranchLabel::LeftDestroyed).probability, 0.0, 1e-15);
  EXPECT_NEAR(out.branch(BranchLabel::RightDestroyed).probability, 0.8, 1e-15);
  EXPECT_NEAR(out.branch(BranchLabel::BothDestroyed).probability, 0.2, 1e-15);
}

TEST(DestroyTwoDistinguishable, BranchesMatchOracle) {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    Rng rng(seed);
    const std::size_t da = 1 + seed % 3;
    const std::size_t db = 1 + (seed / 3) % 3;
    const Projector pa = random_projector(da, rng, 0, da);
    const Projector pb = random_projector(db, rng, 0, db);
    const DensityMatrix rho = random_density(da * db, rng);
    const ProductSpace space = product(da, db);

    const auto na = static_cast<Eigen::Index>(da + 1);
    const auto nb = static_cast<Eigen::Index>(db + 1);
    const Matrix a = oracle::pad(pa.matrix());
    const Matrix b = oracle::pad(pb.matrix());
    const Matrix ia = Matrix::Identity(na, na);
    const Matrix ib = Matrix::Identity(nb, nb);
    const Matrix x = oracle::embed(rho.matrix(), da, db);
    const Matrix p_none = kron(ia - a, ib - b);
    const Matrix p_rh = kron(ia - a, b);
    const Matrix p_lh = kron(a, ib - b);
    const Matrix p_both = kron(a, b);
    const Matrix expected =
        p_none * x * p_none +
        oracle::partial(oracle::Partial::Right, p_rh * x * p_rh, na, nb) +
        oracle::partial(oracle::Partial::Left, p_lh * x * p_lh, na, nb) +
        oracle::full(p_both * x * p_both, na, nb);

    const DestructionOutcome out =
        destroy_two_distinguishable(rho, space, pa, pb, Mode::NoSelection);
    EXPECT_LE(max_abs(out.mixed->matrix() - expected), 1e-13) << "seed " << seed;
    EXPECT_NEAR(out.branch(BranchLabel::RightDestroyed).probability,
                (x * p_rh).trace().real(), 1e-13);
  }
}

TEST(DestroyTwoDistinguishable, SectorsAndLabels) {
  const DestructionOutcome out = destroy_two_distinguishable(
      random_density(4, 1), product(2, 2), up(), up(), Mode::Selection);
  EXPECT_EQ(out.branches.size(), 4u);
  EXPECT_EQ(out.branch(BranchLabel::RightDestroyed).sector,
            SectorTag::OneParticleLeftAlive);
  EXPECT_EQ(out.branch(BranchLabel::LeftDestroyed).sector,
            SectorTag::OneParticleRightAlive);
  EXPECT_EQ(out.branch(BranchLabel::BothDestroyed).sector, SectorTag::Vacuum);
  EXPECT_EQ(to_string(BranchLabel::RightDestroyed), "b_destroyed");
}

TEST(DestroyTwoIdentical, ExampleThreeSinglet) {
  const ProductSpace space = ProductSpace::identical(PhysicalSpace({"up", "down"}));
  const DensityMatrix rho = certify_density(singlet());
  const Eigen::Index n = 3;
  const Vector v = kron(ket(n, 1), ket(n, 2)) + kron(ket(n, 2), ket(n, 1));
  const Matrix expected = 0.5 * v * v.adjoint();

  const DestructionOutcome mixed = destroy_two_identical(
      rho, space, up(), ExchangeSign::Antisymmetric, Mode::NoSelection);
  EXPECT_LE(max_abs(mixed.mixed->matrix() - expected), 1e-12);
  EXPECT_LE(von_neumann_entropy(*mixed.mixed), 1e-10);

  const DestructionOutcome sel = destroy_two_identical(
      rho, space, up(), ExchangeSign::Antisymmetric, Mode::Selection);
  const Branch& one = sel.branch(BranchLabel::OneDestroyed);
  EXPECT_NEAR(one.probability, 1.0, 1e-12);
  EXPECT_EQ(one.sector, SectorTag::OneParticleSymmetrized);
  EXPECT_LE(max_abs(one.state->matrix() - expected), 1e-12);
  EXPECT_FALSE(sel.branch(BranchLabel::NoneDestroyed).possible);
  EXPECT_FALSE(sel.branch(BranchLabel::BothDestroyed).possible);
}

TEST(DestroyTwoIdentical, OneDestroyedBranchMatchesClosedForm) {
  for (std::uint64_t seed = 0; seed < 80; ++seed) {
    Rng rng(seed);
    const std::size_t d = 2 + seed % 2;
    const ExchangeSign sign =
        seed % 4 < 2 ? ExchangeSign::Symmetric : ExchangeSign::Antisymmetric;
    const Projector pi = random_projector(d, rng, 1, d - 1);
    const DensityMatrix rho = random_symmetric_density(d, sign, rng);
    const ProductSpace space = ProductSpace::identical(PhysicalSpace(d));
    const DestructionOutcome sel =
        destroy_two_identical(rho, space, pi, sign, Mode::Selection);
    const Branch& one = sel.branch(BranchLabel::OneDestroyed);
    ASSERT_TRUE(one.state.has_value());
    const Matrix expected =
        oracle::one_destroyed_branch(rho.matrix(), pi.matrix()) / one.probability;
    EXPECT_LE(max_abs(one.state->matrix() - expected), 1e-12) << "seed " << seed;
  }
}

TEST(DestroyTwoIdentical, RejectsWrongSymmetry) {
  const ProductSpace space = ProductSpace::identical(PhysicalSpace(2));
  EXPECT_THROW(destroy_two_identical(certify_density(singlet()), space, up(),
                                     ExchangeSign::Symmetric, Mode::Selection),
               SymmetryViolation);
  const ProductSpace distinct = product(2, 3);
  EXPECT_THROW(destroy_two_identical(random_density(6, 1), distinct, up(),
                                     ExchangeSign::Symmetric, Mode::Selection),
               DistinctSpaces);
}

TEST(NoSelectionMaps, AgreeWithDestroyOnStates) {
  Rng rng(31);
  const std::size_t d = 3;
  const Projector pi = random_projector(d, rng, 1, 2);
  const ProductSpace space = ProductSpace::identical(PhysicalSpace(d));
  const DensityMatrix sym = random_symmetric_density(d, ExchangeSign::Symmetric, rng);
  EXPECT_LE(max_abs(no_selection_two_identical(sym.matrix(), space, pi,
                                               ExchangeSign::Symmetric) -
                    destroy_two_identical(sym, space, pi, ExchangeSign::Symmetric,
                                          Mode::NoSelection)
                        .mixed->matrix()),
            0.0);
  const DensityMatrix rho = random_density(d * d, rng);
  EXPECT_LE(max_abs(no_selection_two_distinguishable(rho.matrix(), space, pi, pi) -
                    destroy_two_distinguishable(rho, space, pi, pi,
                                                Mode::NoSelection)
                        .mixed->matrix()),
            0.0);
  const DensityMatrix one = random_density(d, rng);
  const ExtendedSpace ext{PhysicalSpace(d)};
  EXPECT_LE(max_abs(no_selection_one(embed_physical(one.matrix(), ext), ext, pi) -
                    destroy_one(one, pi, Mode::NoSelection).mixed->matrix()),
            1e-15);
}

TEST(NoSelectionMaps, TracePreservingOnExtendedInputs) {
  Rng rng(12);
  const std::size_t d = 2;
  const ProductSpace space = ProductSpace::identical(PhysicalSpace(d));
  const Projector pi = random_projector(d, rng, 1, 1);
  const Matrix x = random_density(space.dim(), rng).matrix();
  EXPECT_NEAR(no_selection_two_distinguishable(x, space, pi, pi).trace().real(),
              1.0, 1e-12);
}

TEST(Certification, UncertifiedOptionsCarryDefects) {
  DestructionOptions opts;
  opts.certify = false;
  const DestructionOutcome out =
      destroy_one(random_density(2, 3), up(), Mode::NoSelection, opts);
  EXPECT_LE(out.mixed->defects().trace, 1e-12);
}

TEST(Bookkeeping, MixtureIsWeightedBranchSum) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    Rng rng(seed);
    const std::size_t d = 2 + seed % 2;
    const Projector pa = random_projector(d, rng, 0, d);
    const Projector pb = random_projector(d, rng, 0, d);
    const DensityMatrix rho = random_density(d * d, rng);
    const ProductSpace space = product(d, d);
    const DestructionOutcome sel =
        destroy_two_distinguishable(rho, space, pa, pb, Mode::Selection);
    Matrix sum = destroy_two_distinguishable(rho, space, pa, pb, Mode::NoSelection)
                     .mixed->matrix();
    for (const Branch& b : sel.branches) {
      if (b.state) sum -= b.probability * b.state->matrix();
    }
    EXPECT_LE(max_abs(sum), 1e-12);
  }
}

}  // namespace
}  // namespace qdestruct
