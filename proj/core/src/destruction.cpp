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

#include "qdestruct/destruction.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qdestruct {

namespace {

using Index = Eigen::Index;

struct Term {
  BranchLabel label;
  std::optional<SectorTag> sector;
  double probability;
  Matrix unnormalized;
};

DensityMatrix make_state(Matrix m, const DestructionOptions& opts) {
  return opts.certify ? certify_density(std::move(m), opts.tolerances)
                      : inspect_density(std::move(m));
}

Matrix sum_terms(const std::vector<Term>& terms) {
  Matrix sum = terms.front().unnormalized;
  for (std::size_t k = 1; k < terms.size(); ++k) sum += terms[k].unnormalized;
  return sum;
}

DestructionOutcome assemble(std::vector<Term> terms, Mode mode,
                            const DestructionOptions& opts) {
  DestructionOutcome out{mode, {}, std::nullopt};
  for (auto& t : terms) {
    Branch b{t.label, t.sector, t.probability,
             t.probability >= opts.tolerances.probability, std::nullopt};
    if (mode == Mode::Selection && b.possible) {
      b.state = make_state(t.unnormalized / t.probability, opts);
    }
    out.branches.push_back(std::move(b));
  }
  if (mode == Mode::NoSelection) out.mixed = make_state(sum_terms(terms), opts);
  return out;
}

double expectation(const Matrix& x, const Matrix& p) {
  return (x * p).trace().real();
}

void require_dim(Index got, std::size_t want, const char* what) {
  if (got != static_cast<Index>(want)) {
    std::ostringstream os;
    os << what << ": dimension " << got << ", expected " << want;
    throw DimensionMismatch(os.str());
  }
}

struct LiftedPair {
  Matrix none;       // A^perp (x) B^perp
  Matrix right_hit;  // A^perp (x) B
  Matrix left_hit;   // A (x) B^perp
  Matrix both;       // A (x) B
};

LiftedPair lifted_pair(const ProductSpace& space, const Projector& pi_a,
                       const Projector& pi_b) {
  const Matrix a = lift_projector(pi_a, space.left());
  const Matrix a_perp = lift_complement(pi_a, space.left());
  const Matrix b = lift_projector(pi_b, space.right());
  const Matrix b_perp = lift_complement(pi_b, space.right());
  return {tensor(a_perp, b_perp), tensor(a_perp, b), tensor(a, b_perp),
          tensor(a, b)};
}

std::vector<Term> distinguishable_terms(const Matrix& x,
                                        const ProductSpace& space,
                                        const Projector& pi_a,
                                        const Projector& pi_b,
                                        const SupertraceTable& maps) {
  const LiftedPair p = lifted_pair(space, pi_a, pi_b);
  return {
      {BranchLabel::NoneDestroyed, SectorTag::TwoParticle,
       expectation(x, p.none), p.none * x * p.none},
      {BranchLabel::RightDestroyed, SectorTag::OneParticleLeftAlive,
       expectation(x, p.right_hit),
       maps.right(p.right_hit * x * p.right_hit, space)},
      {BranchLabel::LeftDestroyed, SectorTag::OneParticleRightAlive,
       expectation(x, p.left_hit),
       maps.left(p.left_hit * x * p.left_hit, space)},
      {BranchLabel::BothDestroyed, SectorTag::Vacuum, expectation(x, p.both),
       maps.full(p.both * x * p.both, space)},
  };
}

std::vector<Term> identical_terms(const Matrix& x, const ProductSpace& space,
                                  const Projector& pi, ExchangeSign sign,
                                  const SupertraceTable& maps) {
  const LiftedPair p = lifted_pair(space, pi, pi);
  const double s = sign_value(sign);
  Matrix one = maps.right(p.right_hit * x * p.right_hit, space) +
               maps.left(p.left_hit * x * p.left_hit, space) +
               s * maps.inner(p.right_hit * x * p.left_hit, space) +
               s * maps.external(p.left_hit * x * p.right_hit, space);
  return {
      {BranchLabel::NoneDestroyed, SectorTag::TwoParticle,
       expectation(x, p.none), p.none * x * p.none},
      {BranchLabel::OneDestroyed, SectorTag::OneParticleSymmetrized,
       expectation(x, p.right_hit + p.left_hit), std::move(one)},
      {BranchLabel::BothDestroyed, SectorTag::Vacuum, expectation(x, p.both),
       maps.full(p.both * x * p.both, space)},
  };
}

}  // namespace

std::string_view to_string(Mode mode) {
  return mode == Mode::Selection ? "selection" : "no_selection";
}

std::string_view to_string(BranchLabel label) {
  switch (label) {
    case BranchLabel::Destroyed:
      return "destroyed";
    case BranchLabel::Survived:
      return "survived";
    case BranchLabel::NoneDestroyed:
      return "none_destroyed";
    case BranchLabel::RightDestroyed:
      return "b_destroyed";
    case BranchLabel::LeftDestroyed:
      return "a_destroyed";
    case BranchLabel::OneDestroyed:
      return "one_destroyed";
    case BranchLabel::BothDestroyed:
      return "both_destroyed";
  }
  return "unknown";
}

double DestructionOutcome::probability_sum() const {
  return std::accumulate(
      branches.begin(), branches.end(), 0.0,
      [](double acc, const Branch& b) { return acc + b.probability; });
}

const Branch& DestructionOutcome::branch(BranchLabel label) const {
  auto it = std::find_if(branches.begin(), branches.end(),
                         [&](const Branch& b) { return b.label == label; });
  if (it == branches.end()) {
    throw std::out_of_range("no branch labelled " +
                            std::string(to_string(label)));
  }
  return *it;
}

SymmetryViolation::SymmetryViolation(ExchangeSign sign, double violation)
    : Error("state violates the " + std::string(to_string(sign)) +
            " exchange conditions (violation " + std::to_string(violation) +
            ")"),
      violation_(violation) {}

Matrix lift_projector(const Projector& pi, const ExtendedSpace& space) {
  return embed_physical(pi.matrix(), space);
}

Matrix lift_complement(const Projector& pi, const ExtendedSpace& space) {
  const auto n = static_cast<Index>(space.total_dim());
  return Matrix::Identity(n, n) - lift_projector(pi, space);
}

Matrix no_selection_one(const Matrix& x, const ExtendedSpace& space,
                        const Projector& pi) {
  const Matrix a = lift_projector(pi, space);
  const Matrix a_perp = lift_complement(pi, space);
  return a_perp * x * a_perp + supertrace1(a * x * a, space);
}

DestructionOutcome destroy_one(const DensityMatrix& rho, const Projector& pi,
                               Mode mode, const DestructionOptions& opts) {
  const ExtendedSpace space{PhysicalSpace(static_cast<std::size_t>(pi.dim()))};
  Matrix x;
  if (rho.dim() == pi.dim()) {
    x = embed_physical(rho.matrix(), space);
  } else {
    require_dim(rho.dim(), space.total_dim(), "destroy_one: state");
    x = rho.matrix();
  }
  const Matrix a = lift_projector(pi, space);
  const Matrix a_perp = lift_complement(pi, space);
  std::vector<Term> terms{
      {BranchLabel::Destroyed, std::nullopt, expectation(x, a),
       supertrace1(a * x * a, space)},
      {BranchLabel::Survived, std::nullopt, expectation(x, a_perp),
       a_perp * x * a_perp},
  };
  return assemble(std::move(terms), mode, opts);
}

Matrix no_selection_two_distinguishable(const Matrix& x,
                                        const ProductSpace& space,
                                        const Projector& pi_a,
                                        const Projector& pi_b,
                                        const SupertraceTable& maps) {
  return sum_terms(
      distinguishable_terms(as_extended(x, space), space, pi_a, pi_b, maps));
}

DestructionOutcome destroy_two_distinguishable(const DensityMatrix& rho,
                                               const ProductSpace& space,
                                               const Projector& pi_a,
                                               const Projector& pi_b, Mode mode,
                                               const DestructionOptions& opts) {
  require_dim(rho.dim(), space.physical_dim(), "destroy_two: state");
  require_dim(pi_a.dim(), space.left().physical_dim(), "destroy_two: pi_a");
  require_dim(pi_b.dim(), space.right().physical_dim(), "destroy_two: pi_b");
  const SupertraceTable& maps =
      opts.supertraces ? *opts.supertraces : SupertraceTable::standard();
  return assemble(distinguishable_terms(embed_physical(rho.matrix(), space),
                                        space, pi_a, pi_b, maps),
                  mode, opts);
}

Matrix no_selection_two_identical(const Matrix& x, const ProductSpace& space,
                                  const Projector& pi, ExchangeSign sign,
                                  const SupertraceTable& maps) {
  if (!space.same_factors()) throw DistinctSpaces();
  return sum_terms(identical_terms(as_extended(x, space), space, pi, sign, maps));
}

DestructionOutcome destroy_two_identical(const DensityMatrix& rho,
                                         const ProductSpace& space,
                                         const Projector& pi, ExchangeSign sign,
                                         Mode mode,
                                         const DestructionOptions& opts) {
  if (!space.same_factors()) throw DistinctSpaces();
  const std::size_t d = space.left().physical_dim();
  require_dim(rho.dim(), d * d, "destroy_two_identical: state");
  require_dim(pi.dim(), d, "destroy_two_identical: projector");
  const SymmetryReport report = check_exchange_symmetry(rho.matrix(), d, sign);
  if (!report.passed(opts.tolerances.symmetry)) {
    throw SymmetryViolation(sign, report.violation);
  }
  const SupertraceTable& maps =
      opts.supertraces ? *opts.supertraces : SupertraceTable::standard();
  return assemble(
      identical_terms(embed_physical(rho.matrix(), space), space, pi, sign, maps),
      mode, opts);
}

}  // namespace qdestruct
