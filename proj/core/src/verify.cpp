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

#include "qdestruct/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>

namespace qdestruct {

namespace {

using Index = Eigen::Index;

constexpr double kInf = std::numeric_limits<double>::infinity();

// Tolerances fixed by the properties themselves rather than by the config.
constexpr double kExactTol = 1e-15;
constexpr double kCompositionTol = 1e-14;
constexpr double kEntrywiseTol = 1e-12;
constexpr double kMutationMissRate = 0.05;

class Tracker {
 public:
  Tracker(std::string name, double tolerance)
      : name_(std::move(name)), tolerance_(tolerance) {}

  void record(std::size_t trial, std::uint64_t seed, double defect) {
    if (std::isnan(defect)) defect = kInf;
    ++trials_;
    if (trials_ == 1 || defect > max_) {
      max_ = defect;
      worst_trial_ = trial;
      worst_seed_ = seed;
    }
  }

  PropertyReport finish() const {
    return {name_,         trials_,    max_, tolerance_, max_ <= tolerance_,
            worst_trial_, worst_seed_};
  }

 private:
  std::string name_;
  double tolerance_;
  std::size_t trials_ = 0;
  double max_ = 0.0;
  std::size_t worst_trial_ = 0;
  std::uint64_t worst_seed_ = 0;
};

std::size_t cycle_dim(const std::vector<std::size_t>& dims, std::size_t t) {
  return dims[t % dims.size()];
}

std::vector<std::size_t> small_dims(const TrialConfig& config) {
  std::set<std::size_t> out;
  for (std::size_t d : config.dims) {
    if (d <= 3) out.insert(d);
  }
  if (out.empty()) out.insert(2);
  return {out.begin(), out.end()};
}

std::vector<std::size_t> unique_dims(const TrialConfig& config) {
  std::set<std::size_t> out(config.dims.begin(), config.dims.end());
  return {out.begin(), out.end()};
}

std::string dim_suffix(std::size_t d) { return ".d" + std::to_string(d); }

ExchangeSign sign_of(SystemKind kind) {
  return kind == SystemKind::TwoSymmetric ? ExchangeSign::Symmetric
                                          : ExchangeSign::Antisymmetric;
}

ProductSpace product(std::size_t da, std::size_t db) {
  return ProductSpace(ExtendedSpace(PhysicalSpace(da)),
                      ExtendedSpace(PhysicalSpace(db)));
}

// A system kind with fixed dimensions and detector projectors.
struct Instance {
  SystemKind kind;
  std::size_t da;
  std::size_t db;
  Projector pi_a;
  Projector pi_b;
};

Instance draw_instance(SystemKind kind, std::size_t d,
                       const TrialConfig& config, Rng& rng, bool proper) {
  const std::size_t lo = proper ? 1 : 0;
  const std::size_t hi = proper ? d - 1 : d;
  std::size_t db = d;
  if (kind == SystemKind::TwoDistinguishable) {
    db = config.dims[rng.uniform_int(0, config.dims.size() - 1)];
  }
  Projector pi_a = random_projector(d, rng, lo, hi);
  Projector pi_b = kind == SystemKind::TwoDistinguishable
                       ? random_projector(db, rng, proper ? 1 : 0,
                                          proper ? db - 1 : db)
                       : pi_a;
  return {kind, d, db, std::move(pi_a), std::move(pi_b)};
}

DensityMatrix draw_state(const Instance& inst, Rng& rng) {
  switch (inst.kind) {
    case SystemKind::One:
      return random_density(inst.da, rng);
    case SystemKind::TwoDistinguishable:
      return random_density(inst.da * inst.db, rng);
    case SystemKind::TwoSymmetric:
    case SystemKind::TwoAntisymmetric:
      break;
  }
  return random_symmetric_density(inst.da, sign_of(inst.kind), rng);
}

DestructionOutcome destroy(const Instance& inst, const DensityMatrix& rho,
                           Mode mode, const DestructionOptions& opts) {
  if (inst.kind == SystemKind::One) {
    return destroy_one(rho, inst.pi_a, mode, opts);
  }
  const ProductSpace space = product(inst.da, inst.db);
  if (inst.kind == SystemKind::TwoDistinguishable) {
    return destroy_two_distinguishable(rho, space, inst.pi_a, inst.pi_b, mode,
                                       opts);
  }
  return destroy_two_identical(rho, space, inst.pi_a, sign_of(inst.kind), mode,
                               opts);
}

DestructionOptions uncertified(const TrialConfig& config,
                               const SupertraceTable* maps = nullptr) {
  return DestructionOptions{config.tolerances, false, maps};
}

struct KrausDefects {
  double hermiticity = 0.0;
  double trace = 0.0;
  double psd = 0.0;
  double probability = 0.0;

  void absorb(const DensityMatrix& state) {
    const DensityDefects& d = state.defects();
    hermiticity = std::max(hermiticity, d.hermiticity);
    trace = std::max(trace, d.trace);
    psd = std::max(psd, -d.min_eigenvalue);
  }

  void absorb(const DestructionOutcome& out) {
    probability = std::max(probability, std::abs(out.probability_sum() - 1.0));
    if (out.mixed) absorb(*out.mixed);
    for (const Branch& b : out.branches) {
      if (b.state) absorb(*b.state);
    }
  }
};

KrausDefects kraus_defects(const Instance& inst, const DensityMatrix& rho,
                           const DestructionOptions& opts) {
  KrausDefects k;
  k.absorb(destroy(inst, rho, Mode::Selection, opts));
  k.absorb(destroy(inst, rho, Mode::NoSelection, opts));
  return k;
}

Matrix random_matrix(Index n, Rng& rng) {
  return random_gaussian_matrix(n, n, rng);
}

Matrix unit(Index n, Index r, Index c) {
  Matrix e = Matrix::Zero(n, n);
  e(r, c) = 1.0;
  return e;
}

Matrix apply_vec(const Matrix& super, const Matrix& x) {
  const Index n = x.rows();
  Vector v(n * n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) v(i * n + j) = x(i, j);
  }
  const Vector w = super * v;
  Matrix out(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) out(i, j) = w(i * n + j);
  }
  return out;
}

// Sum of the entries of sigma that Inner (resp. External) sends to the
// diagonal: sigma_{(0,j),(j,0)} (resp. sigma_{(i,0),(0,i)}).
Complex inner_diagonal_weight(const Matrix& sigma, const ProductSpace& space) {
  const std::size_t vac = space.left().vacuum_index();
  Complex sum = 0.0;
  for (std::size_t j = 0; j < space.right().total_dim(); ++j) {
    sum += sigma(static_cast<Index>(space.pair_index(vac, j)),
                 static_cast<Index>(space.pair_index(j, vac)));
  }
  return sum;
}

Complex external_diagonal_weight(const Matrix& sigma,
                                 const ProductSpace& space) {
  const std::size_t vac = space.left().vacuum_index();
  Complex sum = 0.0;
  for (std::size_t i = 0; i < space.left().total_dim(); ++i) {
    sum += sigma(static_cast<Index>(space.pair_index(i, vac)),
                 static_cast<Index>(space.pair_index(vac, i)));
  }
  return sum;
}

void append(std::vector<PropertyReport>& out, std::vector<PropertyReport> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()),
             std::make_move_iterator(more.end()));
}

}  // namespace

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::One:
      return "one";
    case SystemKind::TwoDistinguishable:
      return "two_dist";
    case SystemKind::TwoSymmetric:
      return "two_sym";
    case SystemKind::TwoAntisymmetric:
      return "two_antisym";
  }
  return "unknown";
}

std::optional<SystemKind> system_kind_from_string(std::string_view name) {
  for (SystemKind k :
       {SystemKind::One, SystemKind::TwoDistinguishable, SystemKind::TwoSymmetric,
        SystemKind::TwoAntisymmetric}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

void TrialConfig::validate() const {
  if (trials < 1) throw InvalidConfig("trials must be >= 1");
  if (dims.empty()) throw InvalidConfig("dims must not be empty");
  for (std::size_t d : dims) {
    if (d < 2) throw InvalidConfig("every dim must be >= 2");
  }
  if (kinds.empty()) throw InvalidConfig("kinds must not be empty");
}

bool all_passed(const std::vector<PropertyReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const PropertyReport& r) { return r.passed; });
}

Matrix materialize_superoperator(
    const std::function<Matrix(const Matrix&)>& map, Index dim) {
  const Index n2 = dim * dim;
  Matrix super = Matrix::Zero(n2, n2);
  for (Index r = 0; r < dim; ++r) {
    for (Index c = 0; c < dim; ++c) {
      const Matrix image = map(unit(dim, r, c));
      const Index k = r * dim + c;
      for (Index i = 0; i < dim; ++i) {
        for (Index j = 0; j < dim; ++j) super(i * dim + j, k) = image(i, j);
      }
    }
  }
  return super;
}

std::vector<PropertyReport> check_kraus(const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  std::vector<PropertyReport> out;
  for (SystemKind kind : config.kinds) {
    for (std::size_t d : unique_dims(config)) {
      const std::string id =
          "kraus." + std::string(to_string(kind)) + dim_suffix(d);
      const Tolerances& tol = config.tolerances;
      Tracker herm(id + ".hermiticity", tol.hermiticity);
      Tracker trace(id + ".trace", tol.trace);
      Tracker psd(id + ".psd", tol.psd);
      Tracker prob(id + ".probability_sum", tol.trace);
      for (std::size_t t = 0; t < config.trials; ++t) {
        const std::uint64_t seed = derive_seed(config.seed, id, t);
        Rng rng(seed);
        const Instance inst = draw_instance(kind, d, config, rng, false);
        const DensityMatrix rho = draw_state(inst, rng);
        const KrausDefects k = kraus_defects(inst, rho, opts);
        herm.record(t, seed, k.hermiticity);
        trace.record(t, seed, k.trace);
        psd.record(t, seed, k.psd);
        prob.record(t, seed, k.probability);
      }
      for (const Tracker* tr : {&herm, &trace, &psd, &prob}) {
        out.push_back(tr->finish());
      }
    }
  }
  return out;
}

std::vector<PropertyReport> check_destruction_linearity(
    const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  std::vector<PropertyReport> out;
  for (SystemKind kind : config.kinds) {
    const std::string id = "destruction.linearity." + std::string(to_string(kind));
    Tracker tr(id, kEntrywiseTol);
    for (std::size_t t = 0; t < config.trials; ++t) {
      const std::uint64_t seed = derive_seed(config.seed, id, t);
      Rng rng(seed);
      const Instance inst =
          draw_instance(kind, cycle_dim(config.dims, t), config, rng, false);
      const DensityMatrix r1 = draw_state(inst, rng);
      const DensityMatrix r2 = draw_state(inst, rng);
      const double mu = rng.uniform();
      const DensityMatrix mix = certify_density(
          mu * r1.matrix() + (1.0 - mu) * r2.matrix(), config.tolerances);
      auto map = [&](const DensityMatrix& r) -> Matrix {
        return destroy(inst, r, Mode::NoSelection, opts).mixed->matrix();
      };
      tr.record(t, seed,
                max_abs(map(mix) - mu * map(r1) - (1.0 - mu) * map(r2)));
    }
    out.push_back(tr.finish());
  }
  return out;
}

std::vector<PropertyReport> check_supertrace_traces(const TrialConfig& config) {
  config.validate();
  const double tol = config.tolerances.trace;
  Tracker preserve("supertrace.trace_preservation", tol);
  Tracker pattern("supertrace.inner_external_trace_pattern", tol);
  Tracker diagonal("supertrace.inner_external_zero_diagonal",
                   config.tolerances.hermiticity);

  auto lr_defect = [](const Matrix& s, const ProductSpace& space) {
    const Complex tr = s.trace();
    return std::max(
        std::abs(partial_supertrace(SupertraceKind::Left, s, space).trace() - tr),
        std::abs(partial_supertrace(SupertraceKind::Right, s, space).trace() -
                 tr));
  };
  auto ie_defect = [](const Matrix& s, const ProductSpace& space) {
    return std::max(
        std::abs(partial_supertrace(SupertraceKind::Inner, s, space).trace() -
                 inner_diagonal_weight(s, space)),
        std::abs(
            partial_supertrace(SupertraceKind::External, s, space).trace() -
            external_diagonal_weight(s, space)));
  };

  std::size_t t = 0;
  // Exhaustive over basis endomorphisms of the extended product space.
  for (std::size_t d : unique_dims(config)) {
    const ProductSpace space = product(d, d);
    const auto n = static_cast<Index>(space.dim());
    for (Index r = 0; r < n; ++r) {
      for (Index c = 0; c < n; ++c, ++t) {
        const Matrix e = unit(n, r, c);
        preserve.record(t, 0, lr_defect(e, space));
        pattern.record(t, 0, ie_defect(e, space));
      }
    }
  }
  const std::string id = "supertrace.traces.random";
  for (std::size_t k = 0; k < config.trials; ++k, ++t) {
    const std::uint64_t seed = derive_seed(config.seed, id, k);
    Rng rng(seed);
    const std::size_t da = cycle_dim(config.dims, k);
    const std::size_t db = config.dims[rng.uniform_int(0, config.dims.size() - 1)];
    const ProductSpace mixed = product(da, db);
    preserve.record(t, seed,
                    lr_defect(random_matrix(static_cast<Index>(mixed.dim()), rng),
                              mixed));
    const ProductSpace same = product(da, da);
    const Matrix s = random_matrix(static_cast<Index>(same.dim()), rng);
    pattern.record(t, seed, ie_defect(s, same));
    const Matrix phys = random_matrix(static_cast<Index>(da * da), rng);
    const Matrix inner = partial_supertrace(SupertraceKind::Inner, phys, same);
    const Matrix ext = partial_supertrace(SupertraceKind::External, phys, same);
    diagonal.record(t, seed,
                    std::max(inner.diagonal().cwiseAbs().maxCoeff(),
                             ext.diagonal().cwiseAbs().maxCoeff()));
  }
  return {preserve.finish(), pattern.finish(), diagonal.finish()};
}

std::vector<PropertyReport> check_composition(const TrialConfig& config) {
  config.validate();
  std::vector<PropertyReport> out;

  Tracker lr("supertrace.composition.left_right", kCompositionTol);
  std::size_t t = 0;
  for (std::size_t da : small_dims(config)) {
    for (std::size_t db : small_dims(config)) {
      const ProductSpace space = product(da, db);
      const auto n = static_cast<Index>(space.dim());
      auto as_map = [&](SupertraceKind kind) {
        return materialize_superoperator(
            [&](const Matrix& x) { return apply_supertrace(kind, x, space); },
            n);
      };
      const Matrix left = as_map(SupertraceKind::Left);
      const Matrix right = as_map(SupertraceKind::Right);
      const Matrix full = as_map(SupertraceKind::FullProduct);
      lr.record(t++, 0,
                std::max(max_abs(left * right - full),
                         max_abs(right * left - full)));
    }
  }
  out.push_back(lr.finish());

  for (ExchangeSign sign : {ExchangeSign::Symmetric, ExchangeSign::Antisymmetric}) {
    const std::string id =
        "supertrace.composition.inner_external." + std::string(to_string(sign));
    Tracker tr(id, kEntrywiseTol);
    const double s = sign_value(sign);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::uint64_t seed = derive_seed(config.seed, id, k);
      Rng rng(seed);
      const std::size_t d = cycle_dim(config.dims, k);
      const ProductSpace space = ProductSpace::identical(PhysicalSpace(d));
      const Matrix sigma =
          embed_physical(random_symmetric_density(d, sign, rng).matrix(), space);
      const Matrix full = s * supertrace_product(sigma, space);
      const Matrix ie = partial_supertrace(
          SupertraceKind::Inner,
          partial_supertrace(SupertraceKind::External, sigma, space), space);
      const Matrix ei = partial_supertrace(
          SupertraceKind::External,
          partial_supertrace(SupertraceKind::Inner, sigma, space), space);
      tr.record(k, seed, std::max(max_abs(ie - full), max_abs(ei - full)));
    }
    out.push_back(tr.finish());
  }
  return out;
}

std::vector<PropertyReport> check_partial_positivity(const TrialConfig& config) {
  config.validate();
  std::vector<PropertyReport> out;
  for (std::size_t d : unique_dims(config)) {
    const std::string id = "supertrace.partial_positivity" + dim_suffix(d);
    Tracker tr(id, config.tolerances.psd);
    const ProductSpace space = product(d, d);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::uint64_t seed = derive_seed(config.seed, id, k);
      Rng rng(seed);
      const Matrix sigma = random_density(d * d, rng).matrix();
      double worst = 0.0;
      for (SupertraceKind kind : {SupertraceKind::Left, SupertraceKind::Right}) {
        const Eigen::VectorXd ev =
            hermitian_eigenvalues(partial_supertrace(kind, sigma, space));
        worst = std::max(worst, -ev.minCoeff());
      }
      tr.record(k, seed, worst);
    }
    out.push_back(tr.finish());
  }
  return out;
}

std::vector<PropertyReport> check_supertrace_linearity(
    const TrialConfig& config) {
  config.validate();
  constexpr SupertraceKind kKinds[] = {
      SupertraceKind::Left, SupertraceKind::Right, SupertraceKind::Inner,
      SupertraceKind::External, SupertraceKind::FullProduct};

  const std::string id = "supertrace.linearity";
  Tracker random(id, kEntrywiseTol);
  for (std::size_t k = 0; k < config.trials; ++k) {
    const std::uint64_t seed = derive_seed(config.seed, id, k);
    Rng rng(seed);
    const std::size_t d = cycle_dim(config.dims, k);
    const ProductSpace space = product(d, d);
    const auto n = static_cast<Index>(space.dim());
    const Matrix s1 = random_matrix(n, rng);
    const Matrix s2 = random_matrix(n, rng);
    const Complex alpha = rng.complex_gaussian();
    const Complex beta = rng.complex_gaussian();
    double worst = 0.0;
    for (SupertraceKind kind : kKinds) {
      const Matrix lhs = apply_supertrace(kind, alpha * s1 + beta * s2, space);
      const Matrix rhs = alpha * apply_supertrace(kind, s1, space) +
                         beta * apply_supertrace(kind, s2, space);
      worst = std::max(worst, max_abs(lhs - rhs));
    }
    random.record(k, seed, worst);
  }

  // The materialized matrix must reproduce the index-loop map on arbitrary
  // inputs, which holds only if the map is linear.
  const std::string mid = "supertrace.linearity.materialized";
  Tracker materialized(mid, kEntrywiseTol);
  const std::vector<std::size_t> dims = small_dims(config);
  for (std::size_t di = 0; di < dims.size(); ++di) {
    const ProductSpace space = product(dims[di], dims[di]);
    const auto n = static_cast<Index>(space.dim());
    for (SupertraceKind kind : kKinds) {
      auto map = [&](const Matrix& x) { return apply_supertrace(kind, x, space); };
      const Matrix super = materialize_superoperator(map, n);
      const std::uint64_t seed = derive_seed(
          config.seed, mid, di * std::size(kKinds) + static_cast<int>(kind));
      Rng rng(seed);
      const Matrix x = random_matrix(n, rng);
      materialized.record(di, seed, max_abs(apply_vec(super, x) - map(x)));
    }
  }
  return {random.finish(), materialized.finish()};
}

std::vector<PropertyReport> check_irreducibility(const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  const std::vector<std::size_t> dims = small_dims(config);
  std::vector<PropertyReport> out;
  for (SystemKind kind : {SystemKind::TwoSymmetric, SystemKind::TwoAntisymmetric}) {
    const std::string id = "destruction.irreducibility." +
                           std::string(to_string(sign_of(kind)));
    Tracker tr(id, kEntrywiseTol);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::uint64_t seed = derive_seed(config.seed, id, k);
      Rng rng(seed);
      const std::size_t d = cycle_dim(dims, k);
      const Instance inst = draw_instance(kind, d, config, rng, true);
      const DensityMatrix rho = draw_state(inst, rng);
      const DestructionOutcome sel = destroy(inst, rho, Mode::Selection, opts);
      const Branch& one = sel.branch(BranchLabel::OneDestroyed);
      if (!one.state) continue;
      const Matrix p =
          one_particle_sym_projector(product(d, d)).matrix();
      const Matrix& m = one.state->matrix();
      tr.record(k, seed, max_abs(p * m * p - m));
    }
    out.push_back(tr.finish());
  }
  return out;
}

std::vector<PropertyReport> check_idempotence(const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  const std::string id = "destruction.idempotence";
  Tracker tr(id, kEntrywiseTol);
  for (std::size_t k = 0; k < config.trials; ++k) {
    const std::uint64_t seed = derive_seed(config.seed, id, k);
    Rng rng(seed);
    const std::size_t d = cycle_dim(config.dims, k);
    const Projector pi = random_projector(d, rng, 0, d);
    const DensityMatrix rho = random_density(d, rng);
    const DensityMatrix once = *destroy_one(rho, pi, Mode::NoSelection, opts).mixed;
    const DensityMatrix twice =
        *destroy_one(once, pi, Mode::NoSelection, opts).mixed;
    tr.record(k, seed, max_abs(twice.matrix() - once.matrix()));
  }
  return {tr.finish()};
}

std::vector<PropertyReport> check_entropy(const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  const Tolerances& tol = config.tolerances;

  const std::string id = "destruction.entropy.rank_one_no_selection";
  Tracker rank_one(id, tol.trace);
  for (std::size_t k = 0; k < config.trials; ++k) {
    const std::uint64_t seed = derive_seed(config.seed, id, k);
    Rng rng(seed);
    const std::size_t d = cycle_dim(config.dims, k);
    const Projector pi = random_projector(d, rng, 1, 1);
    const DensityMatrix rho = random_density(d, rng);
    const DensityMatrix out = *destroy_one(rho, pi, Mode::NoSelection, opts).mixed;
    double defect = kInf;
    try {
      defect = std::max(0.0, von_neumann_entropy(rho, tol) -
                                 von_neumann_entropy(out.matrix(), tol));
    } catch (const CertificationError&) {
    }
    rank_one.record(k, seed, defect);
  }

  // Spin-1/2 family rho = [[w, c], [c*, 1 - w]] with Pi = |up><up|: every
  // selection branch is pure, hence never more mixed than the input.
  Tracker family("destruction.entropy.selection_family", tol.trace);
  const Projector up = Projector::from_matrix(unit(2, 0, 0));
  std::size_t t = 0;
  for (int wi = 0; wi <= 10; ++wi) {
    const double w = wi / 10.0;
    for (double frac : {0.0, 0.5, 1.0}) {
      for (double phase : {0.0, std::numbers::pi / 2}) {
        const Complex c = std::sqrt(frac * w * (1.0 - w)) * std::polar(1.0, phase);
        Matrix rho(2, 2);
        rho << w, c, std::conj(c), 1.0 - w;
        double defect = kInf;
        try {
          const double s_in = von_neumann_entropy(rho, tol);
          const DestructionOutcome sel =
              destroy_one(certify_density(rho, tol), up, Mode::Selection, opts);
          defect = 0.0;
          for (const Branch& b : sel.branches) {
            if (!b.state) continue;
            const double s_b = von_neumann_entropy(b.state->matrix(), tol);
            defect = std::max({defect, s_b, s_b - s_in});
          }
        } catch (const CertificationError&) {
        }
        family.record(t++, 0, defect);
      }
    }
  }
  return {rank_one.finish(), family.finish()};
}

std::vector<PropertyReport> check_bookkeeping(const TrialConfig& config) {
  config.validate();
  const DestructionOptions opts = uncertified(config);
  std::vector<PropertyReport> out;
  for (SystemKind kind : config.kinds) {
    const std::string id =
        "destruction.bookkeeping." + std::string(to_string(kind));
    Tracker tr(id, kEntrywiseTol);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::uint64_t seed = derive_seed(config.seed, id, k);
      Rng rng(seed);
      const Instance inst =
          draw_instance(kind, cycle_dim(config.dims, k), config, rng, false);
      const DensityMatrix rho = draw_state(inst, rng);
      const DestructionOutcome sel = destroy(inst, rho, Mode::Selection, opts);
      Matrix sum = destroy(inst, rho, Mode::NoSelection, opts).mixed->matrix();
      for (const Branch& b : sel.branches) {
        if (b.state) sum -= b.probability * b.state->matrix();
      }
      tr.record(k, seed, max_abs(sum));
    }
    out.push_back(tr.finish());
  }
  return out;
}

std::vector<PropertyReport> check_symmetry_utilities(const TrialConfig& config) {
  config.validate();
  std::vector<PropertyReport> out;

  Tracker complementary("symmetry.complementary_projectors", kExactTol);
  Tracker rank("symmetry.one_particle_projector_rank",
               config.tolerances.eigenvalue);
  std::size_t t = 0;
  for (std::size_t d : unique_dims(config)) {
    const Matrix plus = exchange_projector(d, ExchangeSign::Symmetric);
    const Matrix minus = exchange_projector(d, ExchangeSign::Antisymmetric);
    const auto n = plus.rows();
    complementary.record(t, 0,
                         std::max(max_abs(plus + minus - Matrix::Identity(n, n)),
                                  max_abs(plus * minus)));
    const Eigen::VectorXd ev = hermitian_eigenvalues(
        one_particle_sym_projector(product(d, d)).matrix());
    double defect = 0.0;
    std::size_t count = 0;
    for (Index i = 0; i < ev.size(); ++i) {
      if (ev(i) > 0.5) ++count;
      defect = std::max(defect, std::min(std::abs(ev(i)), std::abs(ev(i) - 1.0)));
    }
    rank.record(t, 0, defect + std::abs(static_cast<double>(count) -
                                        static_cast<double>(d)));
    ++t;
  }
  out.push_back(complementary.finish());
  out.push_back(rank.finish());

  for (ExchangeSign sign : {ExchangeSign::Symmetric, ExchangeSign::Antisymmetric}) {
    const std::string id =
        "symmetry.symmetrize_round_trip." + std::string(to_string(sign));
    Tracker round_trip(id, kEntrywiseTol);
    Tracker cross("symmetry.swap_cross_check." + std::string(to_string(sign)),
                  kEntrywiseTol);
    for (std::size_t k = 0; k < config.trials; ++k) {
      const std::uint64_t seed = derive_seed(config.seed, id, k);
      Rng rng(seed);
      const std::size_t d = cycle_dim(config.dims, k);
      const Matrix rho = random_density(d * d, rng).matrix();
      const DensityMatrix sym = symmetrize_state(rho, d, sign, config.tolerances);
      round_trip.record(k, seed,
                        check_exchange_symmetry(sym.matrix(), d, sign).violation);
      cross.record(k, seed,
                   std::abs(check_exchange_symmetry(rho, d, sign).violation -
                            exchange_violation_via_swap(rho, d, sign)));
    }
    out.push_back(round_trip.finish());
    out.push_back(cross.finish());
  }
  return out;
}

Matrix corrupted_right_supertrace(const Matrix& op, const ProductSpace& space) {
  const Matrix x = as_extended(op, space);
  const auto n = static_cast<Index>(space.dim());
  const std::size_t vac = space.right().vacuum_index();
  Matrix out = Matrix::Zero(n, n);
  for (Index r = 0; r < n; ++r) {
    const auto [a, b] = space.unpair_index(static_cast<std::size_t>(r));
    for (Index c = 0; c < n; ++c) {
      const auto [a2, b2] = space.unpair_index(static_cast<std::size_t>(c));
      if (a2 != a) continue;
      out(static_cast<Index>(space.pair_index(a, vac)),
          static_cast<Index>(space.pair_index(a2, vac))) += x(r, c);
    }
  }
  return out;
}

MutationReport run_mutation_check(const TrialConfig& config) {
  config.validate();
  SupertraceTable table = SupertraceTable::standard();
  table.right = corrupted_right_supertrace;
  const DestructionOptions opts = uncertified(config, &table);
  const std::string id = "verify.mutation_sensitivity";
  MutationReport report;
  report.min_defect = kInf;
  for (std::size_t k = 0; k < config.trials; ++k) {
    Rng rng(derive_seed(config.seed, id, k));
    const Instance inst = draw_instance(SystemKind::TwoDistinguishable,
                                        cycle_dim(config.dims, k), config, rng,
                                        true);
    const DensityMatrix rho = draw_state(inst, rng);
    const double defect = kraus_defects(inst, rho, opts).trace;
    ++report.trials;
    if (defect > report.threshold) ++report.detected;
    report.min_defect = std::min(report.min_defect, defect);
  }
  return report;
}

std::vector<PropertyReport> run_suite(const TrialConfig& config) {
  config.validate();
  std::vector<PropertyReport> out;
  append(out, check_supertrace_traces(config));
  append(out, check_composition(config));
  append(out, check_partial_positivity(config));
  append(out, check_supertrace_linearity(config));
  append(out, check_kraus(config));
  append(out, check_destruction_linearity(config));
  append(out, check_idempotence(config));
  append(out, check_irreducibility(config));
  append(out, check_entropy(config));
  append(out, check_bookkeeping(config));
  append(out, check_symmetry_utilities(config));

  const MutationReport m = run_mutation_check(config);
  const double miss = 1.0 - m.detected_fraction();
  out.push_back({"verify.mutation_sensitivity", m.trials, miss,
                 kMutationMissRate, miss <= kMutationMissRate, 0, 0});
  return out;
}

}  // namespace qdestruct
