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

// Diagonal-unitary synthesis by state filtering.
//
// Each basis state |k> that needs a relative phase is isolated by flipping
// its zero bits with X, AND-ing all but the last data qubit into ancillas
// with a Toffoli ladder, and applying a controlled phase between the ladder
// output and the last data qubit. The ladder and flips are then undone.
// The most common entry becomes the circuit's tracked global phase.

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>

#include "ljsim/diagonal.hpp"
#include "ljsim/engine.hpp"

namespace ljsim {

struct SynthesisPlan {
  std::size_t n_data_qubits = 4;
  /// Ancillas are placed above the data register, at indices n_data_qubits...
  std::size_t ancilla_count = 1;
  bool use_symmetry_folding = true;
  bool cancel_redundant = true;

  [[nodiscard]] std::size_t total_qubits() const { return n_data_qubits + ancilla_count; }
};

/// Ancillas a Toffoli ladder needs to phase one basis state of an
/// `n_register_qubits`-qubit register: max(0, n - 2).
std::size_t ladder_ancillas_required(std::size_t n_register_qubits);

/// The compute half of a filter: X flips plus the Toffoli ladder.
struct FilterFragment {
  Circuit prologue;
  /// Where the phase goes once the prologue has run. No control means a
  /// single-qubit Phase on `phase_target`.
  std::optional<Qubit> phase_control;
  Qubit phase_target = 0;

  [[nodiscard]] Gate phase_gate(double theta) const;
  /// prologue, phase_gate(theta), prologue mirrored.
  [[nodiscard]] Circuit wrap(double theta) const;
};

/// Filter that singles out the MSB-first bit string `target` over the
/// plan's data qubits.
FilterFragment filter_state(std::string_view target, const SynthesisPlan& plan);

struct FoldResult {
  /// CNOTs from the top data qubit onto every other data qubit.
  Circuit prologue;
  /// Effective diagonal on the remaining n-1 data qubits.
  DiagonalOperator half;
};

/// Folds a diagonal with theta[k] == theta[~k] (bitwise complement over all
/// data qubits) in half. Returns nullopt when that symmetry is absent
/// (tolerance 1e-12) or the diagonal has a single qubit.
std::optional<FoldResult> fold_symmetry(const DiagonalOperator& diag);

/// Appends the filtered synthesis of `diag` over an arbitrary register.
/// `data[b]` carries bit b of the diagonal's index; `ancillas` must be |0>
/// on entry and are returned to |0>. No folding or cancellation is applied.
void append_filtered_diagonal(Circuit& circuit, const DiagonalOperator& diag,
                              std::span<const Qubit> data, std::span<const Qubit> ancillas);

/// Circuit on plan.total_qubits() qubits mapping |k>|0_anc> to
/// exp(i diag[k]) |k>|0_anc>, global phase included.
Circuit synth_diagonal(const DiagonalOperator& diag, const SynthesisPlan& plan);

/// Appends diag (2^m entries) on qubits [offset, offset + m) using only Rz and
/// ControlledPhase gates. The diagonal must be a phase polynomial of degree at
/// most two in the register bits; otherwise UnsupportedError.
void append_phase_polynomial(Circuit& circuit, const DiagonalOperator& diag, Qubit offset);

/// Removes adjacent mutually-inverse gate pairs until none remain. Gates on
/// disjoint qubits are treated as commuting when looking for a partner, and
/// zero-angle rotations are dropped.
Circuit cancel_redundant(const Circuit& circuit);

}  // namespace ljsim
