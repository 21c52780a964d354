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

#include <benchmark/benchmark.h>

#include "qdestruct/destruction.hpp"
#include "qdestruct/random.hpp"
#include "qdestruct/verify.hpp"

namespace {

using namespace qdestruct;

ProductSpace product(std::size_t d) {
  return ProductSpace{ExtendedSpace(PhysicalSpace(d)), ExtendedSpace(PhysicalSpace(d))};
}

void BM_PartialSupertrace(benchmark::State& state) {
  const auto kind = static_cast<SupertraceKind>(state.range(0));
  const auto d = static_cast<std::size_t>(state.range(1));
  const ProductSpace space = product(d);
  Rng rng(1);
  const auto n = static_cast<Eigen::Index>(space.dim());
  const Matrix sigma = random_gaussian_matrix(n, n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_supertrace(kind, sigma, space));
  }
}
BENCHMARK(BM_PartialSupertrace)
    ->ArgsProduct({{static_cast<int>(SupertraceKind::Left),
                    static_cast<int>(SupertraceKind::Inner),
                    static_cast<int>(SupertraceKind::FullProduct)},
                   {2, 4, 8}});

void BM_DestroyOne(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(2);
  const Projector pi = random_projector(d, rng, 1, d - 1);
  const DensityMatrix rho = random_density(d, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(destroy_one(rho, pi, Mode::Selection));
  }
}
BENCHMARK(BM_DestroyOne)->Arg(2)->Arg(4)->Arg(16);

void BM_DestroyTwoDistinguishable(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  const Projector pa = random_projector(d, rng, 1, d - 1);
  const Projector pb = random_projector(d, rng, 1, d - 1);
  const DensityMatrix rho = random_density(d * d, rng);
  const ProductSpace space = product(d);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        destroy_two_distinguishable(rho, space, pa, pb, Mode::Selection));
  }
}
BENCHMARK(BM_DestroyTwoDistinguishable)->Arg(2)->Arg(3)->Arg(4);

void BM_DestroyTwoIdentical(benchmark::State& state) {
  const auto d = static_cast<std::size_t>(state.range(0));
  const auto sign = state.range(1) ? ExchangeSign::Antisymmetric : ExchangeSign::Symmetric;
  Rng rng(4);
  const Projector pi = random_projector(d, rng, 1, d - 1);
  const DensityMatrix rho = random_symmetric_density(d, sign, rng);
  const ProductSpace space = ProductSpace::identical(PhysicalSpace(d));
  for (auto _ : state) {
    benchmark::DoNotOptimize(destroy_two_identical(rho, space, pi, sign, Mode::Selection));
  }
}
BENCHMARK(BM_DestroyTwoIdentical)->ArgsProduct({{2, 3, 4}, {0, 1}});

void BM_KrausSuite(benchmark::State& state) {
  TrialConfig config;
  config.trials = static_cast<std::size_t>(state.range(0));
  config.dims = {2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_kraus(config));
  }
}
BENCHMARK(BM_KrausSuite)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
