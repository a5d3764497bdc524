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
#include <numbers>
#include <numeric>
#include <random>

#include "ljsim/engine.hpp"
#include "ljsim/errors.hpp"
#include "oracles.hpp"

namespace ljsim {
namespace {

using testing::Cplx;

constexpr double kPi = std::numbers::pi;

TEST(BasisLabels, MsbFirstMapsToLittleEndianIndex) {
  EXPECT_EQ(parse_basis_label("0000"), 0U);
  EXPECT_EQ(parse_basis_label("0001"), 1U);
  EXPECT_EQ(parse_basis_label("0100"), 4U);
  EXPECT_EQ(parse_basis_label("1110"), 14U);
  EXPECT_EQ(basis_label(11, 4), "1011");
  for (std::uint64_t k = 0; k < 16; ++k) EXPECT_EQ(parse_basis_label(basis_label(k, 4)), k);
}

TEST(BasisLabels, RejectsNonBinaryCharacters) {
  EXPECT_THROW(parse_basis_label("01a1"), ConfigError);
  EXPECT_THROW(parse_basis_label(""), ConfigError);
}

TEST(PrepareBasisState, PutsUnitAmplitudeOnLabel) {
  for (const auto& [label, index] :
       {std::pair{"0000", 0U}, std::pair{"0001", 1U}, std::pair{"1110", 14U}}) {
    const auto s = prepare_basis_state(4, label);
    ASSERT_EQ(s.dim(), 16U);
    for (std::size_t k = 0; k < 16; ++k) {
      EXPECT_EQ(s[k], Cplx(k == index ? 1.0 : 0.0)) << label << " k=" << k;
    }
  }
}

TEST(PrepareBasisState, LengthMismatchIsConfigError) {
  EXPECT_THROW(prepare_basis_state(4, "001"), ConfigError);
  EXPECT_THROW(prepare_basis_state(2, "0001"), ConfigError);
}

TEST(StateVector, ConstructionChecks) {
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 0.0, 0.0}), ConfigError);
  EXPECT_THROW(StateVector::from_amplitudes({1.0, 1.0}), ConfigError);
  EXPECT_THROW(StateVector(kMaxQubits + 1), ResourceError);
  EXPECT_THROW(StateVector::basis(2, 4), ConfigError);
  EXPECT_DOUBLE_EQ(StateVector(3).norm_squared(), 1.0);
}

TEST(ApplyGate, HadamardOnZero) {
  StateVector s(1);
  apply_gate(s, Gate::h(0));
  EXPECT_NEAR(std::abs(s[0] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - 1.0 / std::sqrt(2.0)), 0.0, 1e-15);
}

TEST(ApplyGate, NotOnQubitZero) {
  auto s = prepare_basis_state(4, "0000");
  apply_gate(s, Gate::x(0));
  EXPECT_EQ(s[parse_basis_label("0001")], Cplx(1.0));
}

TEST(ApplyGate, ControlledPhaseOnlyTouchesOneOne) {
  auto s11 = prepare_basis_state(2, "11");
  apply_gate(s11, Gate::cphase(0, 1, kPi));
  EXPECT_NEAR(std::abs(s11[3] + 1.0), 0.0, 1e-15);

  auto s10 = prepare_basis_state(2, "10");
  apply_gate(s10, Gate::cphase(0, 1, kPi));
  EXPECT_EQ(s10[2], Cplx(1.0));
}

TEST(ApplyGate, InvalidOperandsAreConfigErrors) {
  StateVector s(2);
  EXPECT_THROW(apply_gate(s, Gate::x(2)), ConfigError);
  EXPECT_THROW(apply_gate(s, Gate::cnot(1, 1)), ConfigError);
  EXPECT_THROW(apply_gate(s, Gate::toffoli(0, 1, 2)), ConfigError);
  Circuit c(2);
  EXPECT_THROW(c.x(5), ConfigError);
  EXPECT_THROW(c.swap(0, 0), ConfigError);
}

TEST(ApplyCircuit, EmptyAndInvolution) {
  std::mt19937_64 rng(11);
  const auto s0 = testing::random_state(3, rng);
  auto s = s0;
  apply_circuit(s, Circuit(3));
  EXPECT_EQ(testing::to_eigen(s), testing::to_eigen(s0));
  Circuit xx(3);
  xx.x(0).x(0);
  apply_circuit(s, xx);
  EXPECT_LT((testing::to_eigen(s) - testing::to_eigen(s0)).norm(), 1e-15);
}

TEST(ApplyCircuit, QubitCountMismatchIsConfigError) {
  StateVector s(3);
  EXPECT_THROW(apply_circuit(s, Circuit(4)), ConfigError);
}

TEST(ApplyCircuit, GlobalPhaseIsApplied) {
  Circuit c(1);
  c.set_global_phase(kPi / 2);
  StateVector s(1);
  apply_circuit(s, c);
  EXPECT_NEAR(std::abs(s[0] - Cplx(0, 1)), 0.0, 1e-15);
}

TEST(Gates, LocalMatricesAreUnitary) {
  const std::vector<Gate> all = {Gate::x(0),          Gate::h(0),           Gate::cnot(0, 1),
                                 Gate::toffoli(0, 1, 2), Gate::phase(0, 0.7), Gate::cphase(0, 1, -1.3),
                                 Gate::rz(0, 2.1),    Gate::swap(0, 1)};
  for (const auto& g : all) {
    const auto m = g.local_matrix();
    const auto d = static_cast<Eigen::Index>(std::size_t{1} << g.arity());
    const Eigen::MatrixXcd u = Eigen::Map<const Eigen::MatrixXcd>(m.data(), d, d);
    EXPECT_LT(testing::max_abs_diff(u * u.adjoint(), Eigen::MatrixXcd::Identity(d, d)), 1e-14)
        << gate_name(g.kind);
  }
}

TEST(Gates, InversePairs) {
  EXPECT_TRUE(is_inverse_pair(Gate::x(1), Gate::x(1)));
  EXPECT_FALSE(is_inverse_pair(Gate::x(1), Gate::x(0)));
  EXPECT_TRUE(is_inverse_pair(Gate::cphase(0, 1, 0.3), Gate::cphase(1, 0, -0.3)));
  EXPECT_TRUE(is_inverse_pair(Gate::toffoli(0, 1, 2), Gate::toffoli(1, 0, 2)));
  EXPECT_FALSE(is_inverse_pair(Gate::toffoli(0, 1, 2), Gate::toffoli(0, 2, 1)));
  EXPECT_FALSE(is_inverse_pair(Gate::rz(0, 0.3), Gate::rz(0, 0.3)));
  EXPECT_TRUE(is_inverse_pair(Gate::rz(0, 0.3), Gate::rz(0, 0.3).inverse()));
}

// Every kernel agrees with the basis-state definition of its gate, placed on
// arbitrary operands of a 4-qubit register.
TEST(GateKernels, MatchDenseOracleOnAllOperandPlacements) {
  std::mt19937_64 rng(2026);
  const std::size_t n = 4;
  for (int trial = 0; trial < 200; ++trial) {
    const Circuit one = testing::random_circuit(n, 1, rng);
    if (one.empty()) continue;
    const Gate& g = one.gates().front();
    const auto oracle = testing::oracle_gate_matrix(g, n);
    const auto s = testing::random_state(n, rng);
    auto t = s;
    apply_gate(t, g);
    EXPECT_LT((testing::to_eigen(t) - oracle * testing::to_eigen(s)).cwiseAbs().maxCoeff(), 1e-14)
        << gate_name(g.kind);
  }
}

TEST(CircuitProperties, NormPreservedForRandomCircuits) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    auto s = testing::random_state(n, rng);
    apply_circuit(s, testing::random_circuit(n, 40, rng));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
    for (const auto& a : s.amplitudes()) EXPECT_TRUE(std::isfinite(a.real()) && std::isfinite(a.imag()));
  }
}

TEST(CircuitProperties, InverseUndoesCircuit) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const auto c = testing::random_circuit(n, 30, rng);
    const auto s0 = testing::random_state(n, rng);
    auto s = s0;
    apply_circuit(s, c);
    apply_circuit(s, c.inverse());
    EXPECT_LT((testing::to_eigen(s) - testing::to_eigen(s0)).norm(), 1e-12);
  }
}

TEST(CircuitProperties, AppendComposesAndAddsPhase) {
  std::mt19937_64 rng(9);
  const auto a = testing::random_circuit(3, 10, rng);
  const auto b = testing::random_circuit(3, 10, rng);
  Circuit ab = a;
  ab.append(b);
  EXPECT_EQ(ab.size(), a.size() + b.size());
  EXPECT_DOUBLE_EQ(ab.global_phase(), a.global_phase() + b.global_phase());
  EXPECT_LT(testing::max_abs_diff(testing::oracle_circuit_matrix(ab),
                                  testing::oracle_circuit_matrix(b) * testing::oracle_circuit_matrix(a)),
            1e-12);
  Circuit wide(2);
  EXPECT_THROW(wide.append(a), ConfigError);
}

TEST(Probabilities, Examples) {
  const auto p = probabilities(prepare_basis_state(4, "0001"));
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(p[k], k == 1 ? 1.0 : 0.0);

  StateVector plus(1);
  apply_gate(plus, Gate::h(0));
  const auto q = probabilities(plus);
  EXPECT_NEAR(q[0], 0.5, 1e-15);
  EXPECT_NEAR(q[1], 0.5, 1e-15);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const auto r = probabilities(testing::random_state(4, rng));
    EXPECT_NEAR(std::accumulate(r.begin(), r.end(), 0.0), 1.0, 1e-12);
  }
}

TEST(Probabilities, MarginalTracesOutHighQubits) {
  auto s = prepare_basis_state(3, "101");
  apply_gate(s, Gate::h(2));
  const auto m = marginal_probabilities(s, 2);
  ASSERT_EQ(m.size(), 4U);
  EXPECT_NEAR(m[1], 1.0, 1e-15);
  EXPECT_THROW(marginal_probabilities(s, 4), ConfigError);
}

TEST(Ancillas, ExtensionKeepsAmplitudesInLowBlock) {
  std::mt19937_64 rng(4);
  const auto s = testing::random_state(2, rng);
  const auto e = extend_with_ancillas(s, 2);
  ASSERT_EQ(e.n_qubits(), 4U);
  for (std::size_t k = 0; k < 16; ++k) EXPECT_EQ(e[k], k < 4 ? s[k] : Cplx(0.0));
}

TEST(Sampling, DeterministicStateGetsAllShots) {
  for (std::uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    const auto h = sample(prepare_basis_state(4, "0001"), 8192, seed);
    EXPECT_EQ(h.shots, 8192U);
    EXPECT_EQ(h.counts[1], 8192U);
  }
}

TEST(Sampling, UniformCountsWithinFiveSigma) {
  StateVector s(4);
  for (Qubit q = 0; q < 4; ++q) apply_gate(s, Gate::h(q));
  const auto h = sample(s, 8192, 12345);
  const double p = 1.0 / 16;
  const double sigma = std::sqrt(8192 * p * (1 - p));
  for (auto c : h.counts) EXPECT_LE(std::abs(static_cast<double>(c) - 512.0), 5 * sigma);
}

TEST(Sampling, SameSeedSameHistogram) {
  std::mt19937_64 rng(5);
  const auto s = testing::random_state(4, rng);
  EXPECT_EQ(sample(s, 8192, 42), sample(s, 8192, 42));
  EXPECT_NE(sample(s, 8192, 42), sample(s, 8192, 43));
}

TEST(Sampling, CountsSumToShots) {
  std::mt19937_64 rng(6);
  for (std::uint64_t shots : {1ULL, 7ULL, 1000ULL, 8192ULL}) {
    const auto h = sample(testing::random_state(3, rng), shots, shots);
    EXPECT_EQ(std::accumulate(h.counts.begin(), h.counts.end(), std::uint64_t{0}), shots);
  }
}

TEST(Sampling, ZeroShotsIsConfigError) {
  EXPECT_THROW(sample(StateVector(2), 0, 1), ConfigError);
}

// A single 8192-shot draw from an exact multinomial sampler exceeds TVD 0.02
// roughly one time in ten, so the bound is asserted on the mean over seeds.
TEST(Sampling, EmpiricalDistributionConverges) {
  std::mt19937_64 rng(20261016);
  for (int i = 0; i < 5; ++i) {
    const auto s = testing::random_state(4, rng);
    const auto p = probabilities(s);
    double mean = 0.0;
    constexpr int kSeeds = 200;
    for (int seed = 0; seed < kSeeds; ++seed) {
      const auto h = sample(s, 8192, static_cast<std::uint64_t>(seed));
      std::vector<double> freq(h.counts.size());
      for (std::size_t k = 0; k < freq.size(); ++k) freq[k] = static_cast<double>(h.counts[k]) / 8192.0;
      mean += total_variation_distance(p, freq) / kSeeds;
    }
    EXPECT_LE(mean, 0.02);
  }
}

TEST(Sampling, CountsFollowBinomialMarginals) {
  // Pooled over seeds, each bin's count is Binomial(shots * seeds, p_k).
  std::mt19937_64 rng(77);
  const auto s = testing::random_state(3, rng);
  const auto p = probabilities(s);
  constexpr std::uint64_t kShots = 1000;
  constexpr int kSeeds = 400;
  std::vector<double> pooled(8, 0.0);
  for (int seed = 0; seed < kSeeds; ++seed) {
    const auto h = sample(s, kShots, static_cast<std::uint64_t>(seed) * 7919U);
    for (std::size_t k = 0; k < 8; ++k) pooled[k] += static_cast<double>(h.counts[k]);
  }
  const double n = static_cast<double>(kShots) * kSeeds;
  for (std::size_t k = 0; k < 8; ++k) {
    const double sigma = std::sqrt(n * p[k] * (1 - p[k]));
    EXPECT_LE(std::abs(pooled[k] - n * p[k]), 5 * sigma + 1e-9) << k;
  }
}

TEST(Statistics, TvdAndEntropy) {
  const std::vector<double> a{1, 0, 0, 0};
  const std::vector<double> b{0, 1, 0, 0};
  const std::vector<double> u{0.25, 0.25, 0.25, 0.25};
  EXPECT_DOUBLE_EQ(total_variation_distance(a, b), 1.0);
  EXPECT_DOUBLE_EQ(total_variation_distance(a, a), 0.0);
  EXPECT_DOUBLE_EQ(shannon_entropy(a), 0.0);
  EXPECT_NEAR(shannon_entropy(u), 2.0, 1e-15);
  EXPECT_THROW(total_variation_distance(a, std::vector<double>{1.0}), ConfigError);
}

TEST(MemoryEstimate, EightBytesPerAmplitude) {
  EXPECT_EQ(estimate_state_memory(1), 16U);
  EXPECT_EQ(estimate_state_memory(4), 128U);
  EXPECT_EQ(estimate_state_memory(27), std::uint64_t{1} << 30);
}

}  // namespace
}  // namespace ljsim
