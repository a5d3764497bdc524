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

#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "ljsim/errors.hpp"
#include "ljsim/exact_oracle.hpp"
#include "ljsim/trotter.hpp"
#include "oracles.hpp"

namespace ljsim {
namespace {

using testing::Cplx;

// Dense split step built from definitions: potential phase first, then the
// momentum-space kinetic phase on each register.
Eigen::MatrixXcd oracle_step(double dt, KineticMode mode) {
  const auto f = testing::oracle_dft(2);
  const auto k = kinetic_diagonal(2, 0.5, mode);
  Eigen::VectorXcd kd(4);
  for (int l = 0; l < 4; ++l) kd(l) = std::exp(Cplx(0, -k.phases[static_cast<std::size_t>(l)] * dt));
  const Eigen::MatrixXcd kx = f.adjoint() * kd.asDiagonal() * f;
  const auto v = potential_diagonal({}, PotentialMode::Tabulated);
  Eigen::VectorXcd vd(16);
  for (int i = 0; i < 16; ++i) vd(i) = std::exp(Cplx(0, -v.phases[static_cast<std::size_t>(i)] * dt));
  return testing::kron(kx, kx) * vd.asDiagonal();
}

std::uint64_t swap_registers(std::uint64_t k) { return ((k & 3) << 2) | (k >> 2); }
std::uint64_t reflect(std::uint64_t k) { return 15 - k; }

TEST(StepsForFinalTime, Examples) {
  EXPECT_EQ(steps_for_final_time(std::sqrt(2.0), 0.05), 29U);
  EXPECT_EQ(steps_for_final_time(std::sqrt(2.0), 0.01), 142U);
  EXPECT_EQ(steps_for_final_time(1.0, 1.0), 1U);
  EXPECT_EQ(steps_for_final_time(1.0, 0.1), 10U);
  EXPECT_EQ(steps_for_final_time(0.01, 1.0), 1U);
  EXPECT_THROW(steps_for_final_time(1.0, 0.0), ConfigError);
  EXPECT_THROW(steps_for_final_time(-1.0, 0.1), ConfigError);
}

TEST(StepsForFinalTime, SmallestCoveringCount) {
  std::mt19937_64 rng(61);
  std::uniform_real_distribution<double> u(0.001, 2.0);
  for (int i = 0; i < 500; ++i) {
    const double t = u(rng);
    const double dt = u(rng) / 10;
    const auto s = steps_for_final_time(t, dt);
    EXPECT_GE(static_cast<double>(s) * dt, t);
    if (s > 1) EXPECT_LT(static_cast<double>(s - 1) * dt, t);
  }
}

TEST(TrotterPlan, Validation) {
  TrotterPlan p;
  EXPECT_NO_THROW(p.validate());
  p.dt = 0;
  EXPECT_THROW(p.validate(), ConfigError);
  p.dt = std::nan("");
  EXPECT_THROW(p.validate(), ConfigError);
  p = {};
  p.snapshot_every = 0;
  EXPECT_THROW(p.validate(), ConfigError);
}

TEST(StepCircuit, MatchesDenseProductOracle) {
  for (auto mode : {KineticMode::ZeroNyquist, KineticMode::FullNyquist}) {
    for (double dt : {0.05, 0.01, 0.3}) {
      TrotterPlan p;
      p.dt = dt;
      p.kinetic_mode = mode;
      const auto c = build_step_circuit(p);
      const auto u = data_block(circuit_unitary(c), 4);
      // The potential table is shifted by nothing here, so no phase fit.
      EXPECT_LT(testing::max_abs_diff(u, oracle_step(dt, mode)), 1e-10) << dt;
    }
  }
}

TEST(StepCircuit, EitherConjugationOrderGivesTheSameKinetic) {
  // K is even under p -> -p, so F^dag K F and F K F^dag coincide.
  const auto f = testing::oracle_dft(2);
  for (auto mode : {KineticMode::ZeroNyquist, KineticMode::FullNyquist}) {
    const auto k = kinetic_diagonal(2, 0.5, mode);
    Eigen::VectorXcd kd(4);
    for (int l = 0; l < 4; ++l) kd(l) = k.phases[static_cast<std::size_t>(l)];
    EXPECT_LT(testing::max_abs_diff(f.adjoint() * kd.asDiagonal() * f, f * kd.asDiagonal() * f.adjoint()),
              1e-14);
  }
}

TEST(StepCircuit, UsesOneAncillaByDefault) {
  const auto c = build_step_circuit({});
  EXPECT_EQ(c.n_qubits(), 5U);
  TrotterPlan unfolded;
  unfolded.use_symmetry_folding = false;
  EXPECT_EQ(build_step_circuit(unfolded).n_qubits(), 6U);
  EXPECT_LT(testing::max_abs_diff(data_block(circuit_unitary(build_step_circuit(unfolded)), 4),
                                  data_block(circuit_unitary(c), 4)),
            1e-10);
}

TEST(StepCircuit, TinyStepIsNearIdentity) {
  TrotterPlan p;
  p.dt = 1e-6;
  const auto u = data_block(circuit_unitary(build_step_circuit(p)), 4);
  EXPECT_LT(operator_norm(u - Eigen::MatrixXcd::Identity(16, 16)), 1e-5);
  EXPECT_LT(trotter_error(p), 1e-8);
}

TEST(StepCircuit, CancellationDoesNotChangeUnitary) {
  TrotterPlan p;
  const auto optimized = build_step_circuit(p);
  p.cancel_redundant = false;
  const auto raw = build_step_circuit(p);
  EXPECT_LE(optimized.size(), raw.size());
  EXPECT_LT(testing::max_abs_diff(testing::oracle_circuit_matrix(optimized),
                                  testing::oracle_circuit_matrix(raw)),
            1e-12);
}

TEST(StepCircuit, LargerLatticeUsesFilteredKinetic) {
  TrotterPlan p;
  p.config.qubits_per_particle = 3;
  p.potential_mode = PotentialMode::Formula;
  p.kinetic_mode = KineticMode::FullNyquist;
  p.config.coincident_distance = 0.9;
  p.dt = 0.01;
  const auto c = build_step_circuit(p);
  EXPECT_GE(c.n_qubits(), 6U);
  auto short_run = p;
  short_run.steps = 5;
  EXPECT_EQ(evolve(StateVector::basis(6, 5), short_run).iterations.size(), 6U);
  // Step error against the exact propagator still shrinks quadratically.
  const double e1 = trotter_error(p);
  p.dt = 0.005;
  const double e2 = trotter_error(p);
  EXPECT_GT(e1 / e2, 3.5);
  EXPECT_LT(e1 / e2, 4.5);
}

TEST(Evolve, ReproducesIndependentReference) {
  const auto series = evolve(prepare_basis_state(4, "0001"), {});
  ASSERT_EQ(series.iterations.size(), 30U);
  const auto& last = series.iterations.back();
  EXPECT_EQ(last.step, 29U);
  EXPECT_NEAR(last.probabilities[1], 0.002903975517543439, 1e-10);
}

TEST(Evolve, SnapshotsAreNormalized) {
  for (auto backend : {Backend::Circuit, Backend::Exact}) {
    const auto series = evolve(prepare_basis_state(4, "0110"), {}, backend);
    for (const auto& s : series.iterations) {
      EXPECT_NEAR(std::accumulate(s.probabilities.begin(), s.probabilities.end(), 0.0), 1.0, 1e-12);
      EXPECT_EQ(s.probabilities.size(), 16U);
    }
  }
}

TEST(Evolve, ZeroStepsKeepsOnlyTheInitialDistribution) {
  TrotterPlan p;
  p.steps = 0;
  const auto series = evolve(prepare_basis_state(4, "0011"), p);
  ASSERT_EQ(series.iterations.size(), 1U);
  EXPECT_EQ(series.iterations[0].step, 0U);
  EXPECT_EQ(series.iterations[0].probabilities[3], 1.0);
}

TEST(Evolve, SnapshotIntervalAlwaysKeepsTheFinalStep) {
  TrotterPlan p;
  p.snapshot_every = 10;
  const auto series = evolve(prepare_basis_state(4, "0001"), p);
  std::vector<std::size_t> steps;
  for (const auto& s : series.iterations) steps.push_back(s.step);
  EXPECT_EQ(steps, (std::vector<std::size_t>{0, 10, 20, 29}));
  const auto full = evolve(prepare_basis_state(4, "0001"), {});
  EXPECT_EQ(series.iterations.back(), full.iterations.back());
}

TEST(Evolve, RepeatedStepIsTheSquaredUnitary) {
  TrotterPlan one;
  one.steps = 2;
  std::mt19937_64 rng(62);
  const auto s0 = testing::random_state(4, rng);
  const auto series = evolve(s0, one);
  const auto u = oracle_step(one.dt, one.kinetic_mode);
  const Eigen::VectorXcd psi = u * u * testing::to_eigen(s0);
  for (int k = 0; k < 16; ++k) EXPECT_NEAR(series.iterations[2].probabilities[k], std::norm(psi(k)), 1e-12);
}

TEST(Evolve, RegisterSwapMapsSeriesExactly) {
  const auto a = evolve(prepare_basis_state(4, "0001"), {}, Backend::Exact);
  const auto b = evolve(prepare_basis_state(4, "0100"), {}, Backend::Exact);
  ASSERT_EQ(a.iterations.size(), b.iterations.size());
  for (std::size_t s = 0; s < a.iterations.size(); ++s) {
    for (std::uint64_t k = 0; k < 16; ++k) {
      EXPECT_NEAR(a.iterations[s].probabilities[k], b.iterations[s].probabilities[swap_registers(k)], 1e-10);
    }
  }
}

TEST(Evolve, LatticeSymmetriesCommuteWithEvolution) {
  const std::function<std::uint64_t(std::uint64_t)> group[] = {
      swap_registers, reflect, [](std::uint64_t k) { return reflect(swap_registers(k)); }};
  for (auto backend : {Backend::Exact, Backend::Circuit}) {
    for (std::uint64_t start = 0; start < 16; ++start) {
      const auto a = evolve(StateVector::basis(4, start), {}, backend);
      for (const auto& g : group) {
        const auto b = evolve(StateVector::basis(4, g(start)), {}, backend);
        for (std::size_t s = 0; s < a.iterations.size(); ++s) {
          for (std::uint64_t k = 0; k < 16; ++k) {
            ASSERT_NEAR(a.iterations[s].probabilities[k], b.iterations[s].probabilities[g(k)], 1e-10);
          }
        }
      }
    }
  }
}

TEST(Evolve, CircuitConvergesToExactAsStepShrinks) {
  double previous = 1.0;
  for (double dt : {0.05, 0.02, 0.01}) {
    TrotterPlan p;
    p.dt = dt;
    p.steps = steps_for_final_time(std::sqrt(2.0), dt);
    const auto c = evolve(prepare_basis_state(4, "0001"), p, Backend::Circuit);
    const auto e = evolve(prepare_basis_state(4, "0001"), p, Backend::Exact);
    const double tvd = total_variation_distance(c.iterations.back().probabilities,
                                                e.iterations.back().probabilities);
    EXPECT_LT(tvd, previous) << dt;
    previous = tvd;
  }
}

TEST(Evolve, CommonPhaseDoesNotChangeProbabilities) {
  const auto h = hamiltonian_matrix({}, PotentialMode::Tabulated, KineticMode::ZeroNyquist);
  const auto [shifted, c] = extract_common_phase(potential_diagonal({}, PotentialMode::Tabulated));
  Eigen::MatrixXcd hs = h.matrix;
  for (Eigen::Index k = 0; k < 16; ++k) hs(k, k) -= c;
  std::mt19937_64 rng(63);
  const auto psi = testing::to_eigen(testing::random_state(4, rng));
  for (double t : {0.05, 0.7, 1.45}) {
    const Eigen::VectorXcd a = exact_unitary(h, t).matrix * psi;
    const Eigen::VectorXcd b = exact_unitary(DenseHermitian::from_matrix(hs), t).matrix * psi;
    EXPECT_LT((a.cwiseAbs2() - b.cwiseAbs2()).cwiseAbs().maxCoeff(), 1e-12);
  }
  EXPECT_EQ(shifted.phases[0], 0.0);
}

TEST(Evolve, Errors) {
  EXPECT_THROW(evolve(StateVector(3), {}), ConfigError);
  TrotterPlan bad;
  bad.dt = -1;
  EXPECT_THROW(evolve(StateVector(4), bad), ConfigError);
}

}  // namespace
}  // namespace ljsim
