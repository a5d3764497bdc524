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

#include "ljsim/exact_oracle.hpp"
#include "ljsim/trotter.hpp"

namespace {

using namespace ljsim;

void BM_BuildStepCircuit(benchmark::State& state) {
  TrotterPlan plan;
  for (auto _ : state) benchmark::DoNotOptimize(build_step_circuit(plan).size());
}
BENCHMARK(BM_BuildStepCircuit);

void BM_Evolve(benchmark::State& state) {
  TrotterPlan plan;
  plan.dt = 0.01;
  plan.steps = 142;
  const auto backend = state.range(0) == 0 ? Backend::Circuit : Backend::Exact;
  const auto init = prepare_basis_state(4, "0001");
  for (auto _ : state) benchmark::DoNotOptimize(evolve(init, plan, backend).iterations.size());
}
BENCHMARK(BM_Evolve)->Arg(0)->Arg(1);

void BM_TrotterError(benchmark::State& state) {
  TrotterPlan plan;
  for (auto _ : state) benchmark::DoNotOptimize(trotter_error(plan));
}
BENCHMARK(BM_TrotterError);

void BM_ExactUnitary(benchmark::State& state) {
  LatticeConfig cfg;
  cfg.qubits_per_particle = static_cast<std::size_t>(state.range(0));
  const auto h = hamiltonian_matrix(cfg, PotentialMode::Formula, KineticMode::FullNyquist);
  for (auto _ : state) benchmark::DoNotOptimize(exact_unitary(h, 0.05).matrix.data());
}
BENCHMARK(BM_ExactUnitary)->DenseRange(2, 4);

}  // namespace

BENCHMARK_MAIN();
