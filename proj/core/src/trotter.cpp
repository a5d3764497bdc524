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

#include "ljsim/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ljsim/diag_synth.hpp"
#include "ljsim/errors.hpp"
#include "ljsim/exact_oracle.hpp"
#include "ljsim/qft.hpp"

namespace ljsim {
namespace {

bool has_kinetic(const TrotterPlan& p) { return p.parts != HamiltonianParts::PotentialOnly; }
bool has_potential(const TrotterPlan& p) { return p.parts != HamiltonianParts::KineticOnly; }

DiagonalOperator kinetic_phase(const TrotterPlan& plan) {
  return kinetic_diagonal(plan.config.qubits_per_particle, plan.config.mass, plan.kinetic_mode)
      .scaled(-plan.dt, "kinetic_phase");
}

DiagonalOperator potential_phase(const TrotterPlan& plan) {
  return potential_diagonal(plan.config, plan.potential_mode).scaled(-plan.dt, "potential_phase");
}

// Whether the per-particle kinetic phase fits Rz + ControlledPhase.
bool kinetic_is_pairwise(const DiagonalOperator& k) {
  Circuit scratch(k.n_qubits());
  try {
    append_phase_polynomial(scratch, k, 0);
    return true;
  } catch (const UnsupportedError&) {
    return false;
  }
}

constexpr double kLeakageLimit = 1e-9;

}  // namespace

void TrotterPlan::validate() const {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ConfigError("dt must be positive and finite");
  if (snapshot_every == 0) throw ConfigError("snapshot_every must be at least 1");
  config.validate();
}

std::size_t step_ancilla_count(const TrotterPlan& plan) {
  plan.validate();
  const std::size_t qpp = plan.config.qubits_per_particle;
  const std::size_t n = 2 * qpp;
  std::size_t anc = 0;
  if (has_potential(plan)) {
    const bool folds = plan.use_symmetry_folding && fold_symmetry(potential_phase(plan)).has_value();
    anc = ladder_ancillas_required(folds ? n - 1 : n);
  }
  if (has_kinetic(plan) && !kinetic_is_pairwise(kinetic_phase(plan))) {
    anc = std::max(anc, ladder_ancillas_required(qpp));
  }
  return anc;
}

Circuit build_step_circuit(const TrotterPlan& plan) {
  const std::size_t qpp = plan.config.qubits_per_particle;
  const std::size_t n = 2 * qpp;
  const std::size_t anc = step_ancilla_count(plan);
  Circuit step(n + anc, "trotter_step");

  if (has_potential(plan)) {
    const SynthesisPlan sp{.n_data_qubits = n,
                           .ancilla_count = anc,
                           .use_symmetry_folding = plan.use_symmetry_folding,
                           .cancel_redundant = false};
    step.append(synth_diagonal(potential_phase(plan), sp));
  }

  if (has_kinetic(plan)) {
    const DiagonalOperator k = kinetic_phase(plan);
    const bool pairwise = kinetic_is_pairwise(k);
    std::vector<Qubit> ancillas(anc);
    std::iota(ancillas.begin(), ancillas.end(), static_cast<Qubit>(n));

    const Qubit offsets[2] = {0, static_cast<Qubit>(qpp)};
    for (Qubit off : offsets) append_qft(step, {.n_qubits = qpp, .register_offset = off});
    for (Qubit off : offsets) {
      if (pairwise) {
        append_phase_polynomial(step, k, off);
      } else {
        std::vector<Qubit> reg(qpp);
        std::iota(reg.begin(), reg.end(), off);
        append_filtered_diagonal(step, k, reg, ancillas);
      }
    }
    for (Qubit off : offsets) {
      append_qft(step, {.n_qubits = qpp, .inverse = true, .register_offset = off});
    }
  }

  return plan.cancel_redundant ? cancel_redundant(step) : step;
}

SnapshotSeries evolve(const StateVector& initial, const TrotterPlan& plan, Backend backend) {
  plan.validate();
  const std::size_t n = plan.config.total_qubits();
  if (initial.n_qubits() != n) {
    throw ConfigError("initial state has " + std::to_string(initial.n_qubits()) +
                      " qubits, model needs " + std::to_string(n));
  }

  SnapshotSeries series{{}, plan, backend};
  series.iterations.push_back({0, probabilities(initial)});
  auto wants_snapshot = [&](std::size_t s) {
    return s % plan.snapshot_every == 0 || s == plan.steps;
  };
  if (plan.steps == 0) return series;

  if (backend == Backend::Exact) {
    const auto u = exact_unitary(
        hamiltonian_matrix(plan.config, plan.potential_mode, plan.kinetic_mode, plan.parts),
        plan.dt);
    Eigen::VectorXcd psi(static_cast<Eigen::Index>(initial.dim()));
    for (Eigen::Index k = 0; k < psi.size(); ++k) psi(k) = initial[static_cast<std::size_t>(k)];
    for (std::size_t s = 1; s <= plan.steps; ++s) {
      psi = u.matrix * psi;
      if (wants_snapshot(s)) {
        std::vector<double> p(static_cast<std::size_t>(psi.size()));
        for (Eigen::Index k = 0; k < psi.size(); ++k) p[static_cast<std::size_t>(k)] = std::norm(psi(k));
        series.iterations.push_back({s, std::move(p)});
      }
    }
    return series;
  }

  const Circuit step = build_step_circuit(plan);
  const std::size_t anc = step.n_qubits() - n;
  StateVector state = extend_with_ancillas(initial, anc);
  const std::uint64_t data_dim = std::uint64_t{1} << n;
  for (std::size_t s = 1; s <= plan.steps; ++s) {
    apply_circuit(state, step);
    if (anc > 0) {
      double leak = 0.0;
      const auto amps = state.amplitudes();
      for (std::uint64_t k = data_dim; k < amps.size(); ++k) leak += std::norm(amps[k]);
      if (leak > kLeakageLimit) {
        throw InternalError("ancilla leakage " + std::to_string(leak) + " after step " +
                            std::to_string(s));
      }
    }
    if (wants_snapshot(s)) series.iterations.push_back({s, marginal_probabilities(state, n)});
  }
  return series;
}

std::size_t steps_for_final_time(double t_final, double dt) {
  if (!(t_final > 0.0) || !(dt > 0.0)) throw ConfigError("t_final and dt must be positive");
  auto s = static_cast<std::size_t>(std::ceil(t_final / dt));
  while (s > 1 && static_cast<double>(s - 1) * dt >= t_final) --s;
  while (static_cast<double>(s) * dt < t_final) ++s;
  return std::max<std::size_t>(s, 1);
}

}  // namespace ljsim
