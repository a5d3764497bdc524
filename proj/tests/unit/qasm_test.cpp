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

#include <random>

#include "ljsim/diag_synth.hpp"
#include "ljsim/errors.hpp"
#include "ljsim/exact_oracle.hpp"
#include "ljsim/lj_model.hpp"
#include "ljsim/qasm.hpp"
#include "ljsim/qft.hpp"
#include "ljsim/trotter.hpp"
#include "oracles.hpp"

namespace ljsim {
namespace {

std::string body(const std::string& qasm) {
  return qasm.substr(qasm.find("qreg"));
}

TEST(QasmExport, HeaderAndSingleGates) {
  Circuit h(1);
  h.h(0);
  EXPECT_EQ(to_qasm(h), "OPENQASM 2.0;\ninclude \"qelib1.inc\";\nqreg q[1];\nh q[0];\n");

  Circuit t(3);
  t.toffoli(0, 1, 2);
  EXPECT_EQ(body(to_qasm(t)), "qreg q[3];\nccx q[0],q[1],q[2];\n");
}

TEST(QasmExport, GateVocabulary) {
  Circuit c(3, "mix");
  c.x(0).cnot(0, 1).phase(2, 0.5).cphase(0, 2, -0.25).rz(1, 1.0).swap(0, 2);
  c.set_global_phase(0.75);
  EXPECT_EQ(to_qasm(c, {.measured_qubits = 2}),
            "OPENQASM 2.0;\n"
            "include \"qelib1.inc\";\n"
            "// mix\n"
            "// global_phase 0.75\n"
            "qreg q[3];\n"
            "creg c[2];\n"
            "x q[0];\n"
            "cx q[0],q[1];\n"
            "u1(0.5) q[2];\n"
            "cu1(-0.25) q[0],q[2];\n"
            "rz(1) q[1];\n"
            "swap q[0],q[2];\n"
            "measure q[0] -> c[0];\n"
            "measure q[1] -> c[1];\n");
  EXPECT_THROW(to_qasm(c, {.measured_qubits = 4}), ExportError);
}

TEST(QasmExport, AnglesUseSeventeenDigits) {
  Circuit c(1);
  c.rz(0, 0.1);
  EXPECT_NE(to_qasm(c).find("rz(0.10000000000000001) q[0];"), std::string::npos);
}

TEST(QasmRoundTrip, BuilderCircuitsReimportToSameUnitary) {
  std::vector<Circuit> circuits;
  for (std::size_t n = 1; n <= 5; ++n) {
    circuits.push_back(build_qft({.n_qubits = n}));
    circuits.push_back(build_qft({.n_qubits = n, .inverse = true}));
  }
  const auto v = potential_diagonal({}, PotentialMode::Tabulated).scaled(-0.05);
  circuits.push_back(synth_diagonal(v, {}));
  circuits.push_back(build_step_circuit({}));
  TrotterPlan full_nyquist;
  full_nyquist.kinetic_mode = KineticMode::FullNyquist;
  full_nyquist.dt = 0.01;
  circuits.push_back(build_step_circuit(full_nyquist));
  for (const auto& c : circuits) {
    const auto back = parse_qasm(to_qasm(c));
    EXPECT_EQ(back, c) << c.label();
    EXPECT_LT(testing::max_abs_diff(circuit_unitary(back).matrix, circuit_unitary(c).matrix), 1e-9);
  }
}

TEST(QasmRoundTrip, RandomCircuits) {
  std::mt19937_64 rng(81);
  for (int i = 0; i < 30; ++i) {
    const auto c = testing::random_circuit(1 + i % 5, 20, rng);
    EXPECT_EQ(parse_qasm(to_qasm(c)), c);
  }
}

TEST(QasmParse, AcceptsCommonVariants) {
  const auto c = parse_qasm(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg r[2]; creg m[2];\n"
      "p(0.5) r[0];  // phase alias\n"
      "cp(1.5) r[0], r[1];\n"
      "barrier r[0],r[1];\n"
      "measure r[0] -> m[0];\n");
  ASSERT_EQ(c.size(), 2U);
  EXPECT_EQ(c.gates()[0], Gate::phase(0, 0.5));
  EXPECT_EQ(c.gates()[1], Gate::cphase(0, 1, 1.5));
  EXPECT_EQ(c.label(), "phase alias");
}

TEST(QasmParse, Errors) {
  EXPECT_THROW(parse_qasm("OPENQASM 3.0; qreg q[1];"), ConfigError);
  EXPECT_THROW(parse_qasm("h q[0];"), ConfigError);
  EXPECT_THROW(parse_qasm("qreg q[1]; u3(1,2,3) q[0];"), ConfigError);
  EXPECT_THROW(parse_qasm("qreg q[1]; h q[0]"), ConfigError);
  EXPECT_THROW(parse_qasm("qreg q[2]; cx q[0];"), ConfigError);
  EXPECT_THROW(parse_qasm("qreg q[2]; rz q[0];"), ConfigError);
  EXPECT_THROW(parse_qasm("qreg q[2]; x q[5];"), ConfigError);
  EXPECT_THROW(parse_qasm("OPENQASM 2.0;"), ConfigError);
}

}  // namespace
}  // namespace ljsim
