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

// Quantum Fourier transform circuits built from Hadamard and controlled-phase
// gates, plus the dense DFT matrix they are checked against.

#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "ljsim/diagonal.hpp"
#include "ljsim/engine.hpp"

namespace ljsim {

struct QftSpec {
  std::size_t n_qubits = 1;
  bool inverse = false;
  /// Append the swaps that undo the textbook circuit's bit reversal, so the
  /// circuit equals the DFT matrix in the engine's bit order.
  bool include_bit_reversal_swaps = true;
  /// First qubit of the transformed register inside a wider circuit.
  Qubit register_offset = 0;
};

/// Circuit on `register_offset + n_qubits` qubits implementing
///   |y> -> N^{-1/2} sum_x exp(2 pi i x y / N) |x>,  N = 2^n_qubits,
/// on the selected register (or its adjoint when `inverse` is set).
Circuit build_qft(const QftSpec& spec);

/// Appends the QFT of `spec` to an existing circuit.
void append_qft(Circuit& circuit, const QftSpec& spec);

/// Dense N x N matrix U[x][y] = exp(2 pi i x y / N) / sqrt(N). n <= 12.
Eigen::MatrixXcd qft_reference_matrix(std::size_t n_qubits);

/// QFT, then multiply basis state k by exp(i diag[k]), then inverse QFT.
void conjugate_by_qft(const DiagonalOperator& diag, StateVector& state);

}  // namespace ljsim
