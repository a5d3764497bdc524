// Copyright 2026 The ljsim Authors
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

#include <random>

#include "ljsim/diag_synth.hpp"
#include "ljsim/lj_model.hpp"

namespace {

using namespace ljsim;

void BM_SynthTabulatedPotential(benchmark::State& state) {
  const auto v = potential_diagonal({}, PotentialMode::Tabulated).scaled(-0.05);
  const SynthesisPlan plan{.n_data_qubits = 4,
                           .ancilla_count = 2,
                           .use_symmetry_folding = state.range(0) != 0};
  std::size_t gates = 0;
  for (auto _ : state) {
    const auto c = synth_diagonal(v, plan);
    gates = c.size();
    benchmark::DoNotOptimize(c.gates().data());
  }
  state.counters["gates"] = static_cast<double>(gates);
}
BENCHMARK(BM_SynthTabulatedPotential)->Arg(0)->Arg(1);

void BM_SynthRandomDiagonal(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> ang(-3, 3);
  DiagonalOperator d{std::vector<double>(std::size_t{1} << n), "random"};
  for (auto& p : d.phases) p = ang(rng);
  const SynthesisPlan plan{.n_data_qubits = n, .ancilla_count = ladder_ancillas_required(n)};
  for (auto _ : state) benchmark::DoNotOptimize(synth_diagonal(d, plan).size());
}
BENCHMARK(BM_SynthRandomDiagonal)->DenseRange(2, 8, 2);

void BM_CancelRedundant(benchmark::State& state) {
  const auto v = potential_diagonal({}, PotentialMode::Tabulated).scaled(-0.05);
  const auto raw = synth_diagonal(v, {.n_data_qubits = 4,
                                      .ancilla_count = 2,
                                      .use_symmetry_folding = false,
                                      .cancel_redundant = false});
  for (auto _ : state) benchmark::DoNotOptimize(cancel_redundant(raw).size());
  state.counters["input_gates"] = static_cast<double>(raw.size());
}
BENCHMARK(BM_CancelRedundant);

}  // namespace

BENCHMARK_MAIN();
