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

#include "ljsim/engine.hpp"
#include "ljsim/qft.hpp"

namespace {

using namespace ljsim;

StateVector spread_state(std::size_t n) {
  StateVector s(n);
  for (Qubit q = 0; q < n; ++q) apply_gate(s, Gate::h(q));
  return s;
}

void BM_SingleQubitGate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto s = spread_state(n);
  const Gate g = state.range(1) == 0 ? Gate::h(static_cast<Qubit>(n / 2)) : Gate::rz(static_cast<Qubit>(n / 2), 0.3);
  for (auto _ : state) {
    apply_gate(s, g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) *
                          static_cast<std::int64_t>(s.dim() * sizeof(Amplitude)));
}
BENCHMARK(BM_SingleQubitGate)->ArgsProduct({{10, 16, 20}, {0, 1}});

void BM_Toffoli(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto s = spread_state(n);
  const Gate g = Gate::toffoli(0, static_cast<Qubit>(n - 1), static_cast<Qubit>(n / 2));
  for (auto _ : state) {
    apply_gate(s, g);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
}
BENCHMARK(BM_Toffoli)->Arg(10)->Arg(16)->Arg(20);

void BM_QftCircuit(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Circuit qft = build_qft({.n_qubits = n});
  auto s = spread_state(n);
  for (auto _ : state) {
    apply_circuit(s, qft);
    benchmark::DoNotOptimize(s.amplitudes().data());
  }
  state.counters["gates"] = static_cast<double>(qft.size());
}
BENCHMARK(BM_QftCircuit)->DenseRange(4, 16, 4);

void BM_Sample(benchmark::State& state) {
  const auto s = spread_state(4);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(sample(s, static_cast<std::uint64_t>(state.range(0)), ++seed));
}
BENCHMARK(BM_Sample)->Arg(8192)->Arg(1 << 20);

}  // namespace

BENCHMARK_MAIN();
