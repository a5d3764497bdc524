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

// First-order split-operator evolution: one step applies the potential phase
// in the position basis, then each particle's kinetic phase in its momentum
// basis (QFT, diagonal, inverse QFT).

#pragma once

#include <cstddef>
#include <vector>

#include "ljsim/engine.hpp"
#include "ljsim/lj_model.hpp"

namespace ljsim {

enum class Backend {
  Circuit,  // synthesized gate circuit on the state-vector engine
  Exact,    // dense exp(-i H dt) from the spectral decomposition
};

struct TrotterPlan {
  double dt = 0.05;
  std::size_t steps = 29;
  PotentialMode potential_mode = PotentialMode::Tabulated;
  KineticMode kinetic_mode = KineticMode::ZeroNyquist;
  LatticeConfig config;
  std::size_t snapshot_every = 1;
  HamiltonianParts parts = HamiltonianParts::Full;
  bool use_symmetry_folding = true;
  bool cancel_redundant = true;

  void validate() const;
};

struct Snapshot {
  std::size_t step = 0;
  std::vector<double> probabilities;

  bool operator==(const Snapshot&) const = default;
};

struct SnapshotSeries {
  /// Step 0 (the initial distribution) first, then every `snapshot_every`
  /// steps, always ending with the final step.
  std::vector<Snapshot> iterations;
  TrotterPlan plan;
  Backend backend = Backend::Circuit;
};

/// Ancilla qubits the step circuit for `plan` uses.
std::size_t step_ancilla_count(const TrotterPlan& plan);

/// One time step over 2 * qubits_per_particle data qubits followed by
/// step_ancilla_count(plan) ancillas.
Circuit build_step_circuit(const TrotterPlan& plan);

/// Runs plan.steps steps from `initial` (data qubits only).
SnapshotSeries evolve(const StateVector& initial, const TrotterPlan& plan,
                      Backend backend = Backend::Circuit);

/// Smallest s with s * dt >= t_final.
std::size_t steps_for_final_time(double t_final, double dt);

}  // namespace ljsim
