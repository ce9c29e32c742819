// Copyright 2026 The macbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "macbound/classical_bounds.hpp"
#include "macbound/decoders.hpp"
#include "macbound/hermitian.hpp"
#include "macbound/quantum_bounds.hpp"
#include "macbound/spectrum.hpp"

namespace {

using namespace macbound;

void BM_HermitianEig(benchmark::State& state) {
  Rng rng(1);
  const auto a = random_hermitian(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(hermitian_eig(a));
}
BENCHMARK(BM_HermitianEig)->RangeMultiplier(2)->Range(2, 64);

void BM_ProjectorLeq(benchmark::State& state) {
  Rng rng(2);
  const auto a = random_hermitian(state.range(0), rng);
  const auto b = random_hermitian(state.range(0), rng);
  for (auto _ : state) benchmark::DoNotOptimize(projector_leq(a, b));
}
BENCHMARK(BM_ProjectorLeq)->Arg(4)->Arg(16);

void BM_Theorem1Sum(benchmark::State& state) {
  Rng rng(3);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ClassicalMAC w(n, n, random_stochastic_rows(n * n, n, rng));
  const auto joint = joint_from_setting1(Distribution::uniform(n * n), w);
  const auto fam = DominatedFamily::from_marginals(joint);
  const AlphaTriple a(0.1, 0.2, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(theorem1_positive_part_sum(joint, fam, a));
}
BENCHMARK(BM_Theorem1Sum)->Arg(3)->Arg(8)->Arg(16);

void BM_MinError(benchmark::State& state) {
  Rng rng(4);
  const auto n = static_cast<std::size_t>(state.range(0));
  const ClassicalMAC w(n, n, random_stochastic_rows(n * n, n, rng));
  const auto joint = joint_from_setting1(Distribution::uniform(n * n), w);
  for (auto _ : state) benchmark::DoNotOptimize(min_error(joint));
}
BENCHMARK(BM_MinError)->Arg(3)->Arg(16);

void BM_KTerm(benchmark::State& state) {
  Rng rng(5);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto base = random_cq_mac(2, 2, 2, rng);
  const auto wn = product_extend(base, n);
  const auto u = Distribution::uniform(2);
  const auto p1 = product_extend(u, n);
  const auto st = wp_triple(p1, p1, wn);
  for (auto _ : state) benchmark::DoNotOptimize(k_term(wn, p1, p1, st, RatePair(0.3, 0.2), n));
}
BENCHMARK(BM_KTerm)->DenseRange(1, 3);

void BM_PgmDecoder(benchmark::State& state) {
  Rng rng(6);
  const auto wq = random_cq_mac(3, 3, state.range(0), rng);
  const auto p = Distribution::uniform(9);
  for (auto _ : state) benchmark::DoNotOptimize(pgm_decoder(p, wq));
}
BENCHMARK(BM_PgmDecoder)->Arg(2)->Arg(4);

}  // namespace
BENCHMARK_MAIN();
