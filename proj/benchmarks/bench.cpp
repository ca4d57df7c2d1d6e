// Copyright 2026 The Puribound Authors
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

#include "puribound/adversarial.hpp"
#include "puribound/simulator.hpp"
#include "puribound/threshold.hpp"

namespace {

using namespace puribound;

void BM_EofInverse(benchmark::State& state) {
  double s = 0.0;
  for (auto _ : state) {
    s += 1e-4;
    if (s > 1.0) s = 1e-4;
    benchmark::DoNotOptimize(eof_inverse(s));
  }
}
BENCHMARK(BM_EofInverse);

void BM_Apex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(apex(2.5).q);
  }
}
BENCHMARK(BM_Apex);

void BM_MaxApex(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(max_apex().q);
  }
}
BENCHMARK(BM_MaxApex);

void BM_Concurrence(benchmark::State& state) {
  const auto rho = DensityMatrix4::from_bell_diagonal(BellDiagonal(0.7, 0.15, 0.1, 0.05));
  for (auto _ : state) {
    benchmark::DoNotOptimize(concurrence(rho));
  }
}
BENCHMARK(BM_Concurrence);

void BM_GateOracle(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(fidelity_gate_oracle(0.05, n, Pauli::X, Pauli::Z));
  }
}
BENCHMARK(BM_GateOracle)->Arg(3)->Arg(5)->Arg(7);

void BM_PurificationRound(benchmark::State& state) {
  const BellDiagonal in = BellDiagonal::werner(0.85);
  const GateNoiseSpec noise(GateNoiseSpec::Model::depolarizing, 0.02);
  for (auto _ : state) {
    benchmark::DoNotOptimize(purification_round(in, in, noise, Protocol::dejmps).success_prob);
  }
}
BENCHMARK(BM_PurificationRound);

void BM_WorstUnitarySlice(benchmark::State& state) {
  const BellDiagonal st = BellDiagonal::werner(0.9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(worst_unitary_search(st, 0.1, 16, 16).eof_min);
  }
}
BENCHMARK(BM_WorstUnitarySlice);

}  // namespace

BENCHMARK_MAIN();
