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

#include "ljsim/qft.hpp"

#include <bit>
#include <cmath>
#include <numbers>

#include "ljsim/errors.hpp"

namespace ljsim {

std::size_t DiagonalOperator::n_qubits() const {
  const std::size_t d = phases.size();
  if (d < 2 || (d & (d - 1)) != 0) {
    throw ConfigError("diagonal '" + label + "' has " + std::to_string(d) +
                      " entries, not a power of two >= 2");
  }
  return static_cast<std::size_t>(std::countr_zero(d));
}

DiagonalOperator DiagonalOperator::scaled(double factor, std::string new_label) const {
  DiagonalOperator out{phases, new_label.empty() ? label : std::move(new_label)};
  for (auto& p : out.phases) p *= factor;
  return out;
}

void append_qft(Circuit& circuit, const QftSpec& spec) {
  if (spec.n_qubits == 0) throw ConfigError("QFT needs at least one qubit");
  const std::size_t width = spec.register_offset + spec.n_qubits;
  if (width > circuit.n_qubits()) {
    throw ConfigError("QFT register [" + std::to_string(spec.register_offset) + ", " +
                      std::to_string(width) + ") does not fit a " +
                      std::to_string(circuit.n_qubits()) + "-qubit circuit");
  }

  const auto n = static_cast<Qubit>(spec.n_qubits);
  const Qubit off = spec.register_offset;
  Circuit qft(width);
  // Most significant qubit first; each target collects phases 2 pi / 2^m
  // from every lower qubit, m = distance + 1.
  for (Qubit t = n; t-- > 0;) {
    qft.h(off + t);
    for (Qubit c = t; c-- > 0;) {
      const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(t - c + 1));
      qft.cphase(off + c, off + t, angle);
    }
  }
  if (spec.include_bit_reversal_swaps) {
    for (Qubit i = 0; i < n / 2; ++i) qft.swap(off + i, off + n - 1 - i);
  }
  circuit.append(spec.inverse ? qft.inverse() : qft);
}

Circuit build_qft(const QftSpec& spec) {
  if (spec.n_qubits == 0) throw ConfigError("QFT needs at least one qubit");
  Circuit c(spec.register_offset + spec.n_qubits, spec.inverse ? "iqft" : "qft");
  append_qft(c, spec);
  return c;
}

Eigen::MatrixXcd qft_reference_matrix(std::size_t n_qubits) {
  if (n_qubits == 0) throw ConfigError("QFT needs at least one qubit");
  if (n_qubits > 12) {
    throw ResourceError("dense QFT reference limited to 12 qubits, got " +
                        std::to_string(n_qubits));
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index x = 0; x < dim; ++x) {
    for (Eigen::Index y = 0; y < dim; ++y) {
      // reduce x*y mod N first so large products keep full angle precision
      const auto r = static_cast<double>((x * y) % dim);
      u(x, y) = std::polar(scale, 2.0 * std::numbers::pi * r / static_cast<double>(dim));
    }
  }
  return u;
}

void conjugate_by_qft(const DiagonalOperator& diag, StateVector& state) {
  if (diag.size() != state.dim()) {
    throw ConfigError("diagonal of size " + std::to_string(diag.size()) +
                      " does not match state dimension " + std::to_string(state.dim()));
  }
  const QftSpec forward{.n_qubits = state.n_qubits()};
  apply_circuit(state, build_qft(forward));
  auto amps = state.amplitudes();
  for (std::size_t k = 0; k < amps.size(); ++k) amps[k] *= std::polar(1.0, diag.phases[k]);
  apply_circuit(state, build_qft({.n_qubits = state.n_qubits(), .inverse = true}));
}

}  // namespace ljsim
