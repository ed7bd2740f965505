// Copyright 2026 The Authors.
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

// Serial reference against the OpenMP elimination kernel.
#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "osres/bgg.hpp"
#include "osres/fixtures.hpp"
#include "osres/linalg.hpp"
#include "osres/resolution.hpp"

using namespace osres;

namespace {

Matrix random_matrix(Field k, int n, double density, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0, 1);
  std::uniform_int_distribution<long> val(-9, 9);
  Matrix m(k, n, n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      if (coin(rng) < density) m.add(r, c, k.from_int(val(rng)));
    }
  }
  return m;
}

Field field_for(int64_t id) { return id == 0 ? Field::prime(32003) : Field::rationals(); }

void BM_Rank(benchmark::State& state, Backend backend) {
  const Field k = field_for(state.range(0));
  const int n = static_cast<int>(state.range(1));
  const Matrix m = random_matrix(k, n, 0.05, 11);
  for (auto _ : state) benchmark::DoNotOptimize(rank(m, backend));
  state.SetLabel(k.to_string() + (backend == Backend::kSerial ? " serial" : " omp"));
}

void BM_Betti(benchmark::State& state, Backend backend) {
  const Field k = field_for(state.range(0));
  const HomologyModule h = homology_module(braid_arrangement(k, 4), k);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(h.module, 3, backend));
  state.SetLabel(k.to_string() + (backend == Backend::kSerial ? " serial" : " omp"));
}

void BM_FHilbert(benchmark::State& state, Backend backend) {
  const Field k = field_for(state.range(0));
  const Arrangement a = generic_lines(k, 7);
  const GradedModule alg = quotient_module(k, a.size(), os_ideal(a, k));
  for (auto _ : state) benchmark::DoNotOptimize(f_module_hilbert(alg, 3, backend));
  state.SetLabel(k.to_string() + (backend == Backend::kSerial ? " serial" : " omp"));
}

void rank_args(benchmark::internal::Benchmark* b) {
  // Rational entries grow quickly, so Q gets smaller matrices.
  for (int n : {100, 300}) b->Args({0, n});
  for (int n : {60, 120}) b->Args({1, n});
  b->Unit(benchmark::kMillisecond);
}

void field_args(benchmark::internal::Benchmark* b) {
  b->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK_CAPTURE(BM_Rank, serial, Backend::kSerial)->Apply(rank_args);
BENCHMARK_CAPTURE(BM_Rank, omp, Backend::kParallel)->Apply(rank_args);
BENCHMARK_CAPTURE(BM_Betti, serial, Backend::kSerial)->Apply(field_args);
BENCHMARK_CAPTURE(BM_Betti, omp, Backend::kParallel)->Apply(field_args);
BENCHMARK_CAPTURE(BM_FHilbert, serial, Backend::kSerial)->Apply(field_args);
BENCHMARK_CAPTURE(BM_FHilbert, omp, Backend::kParallel)->Apply(field_args);

BENCHMARK_MAIN();
