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

// State-vector engine: basis-state preparation, bit-indexed gate kernels,
// probabilities and seeded shot sampling.
//
// Bit order: basis index k = sum_b q_b * 2^b, qubit 0 least significant.
// Labels are written most-significant first, so "0001" is index 1 and
// "q3q2q1q0" reads left to right.

#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ljsim {

using Qubit = std::uint32_t;
using Amplitude = std::complex<double>;

/// Largest register the engine will allocate.
inline constexpr std::size_t kMaxQubits = 26;

enum class GateKind : std::uint8_t {
  X,
  H,
  CNOT,
  Toffoli,
  Phase,            // diag(1, e^{i theta})
  ControlledPhase,  // e^{i theta} on |11>
  Rz,               // diag(e^{-i theta/2}, e^{i theta/2})
  Swap,
};

std::string_view gate_name(GateKind kind);

/// One gate. Operands are stored controls first, target last.
struct Gate {
  GateKind kind = GateKind::X;
  std::array<Qubit, 3> qubits{};
  double angle = 0.0;

  static Gate x(Qubit q);
  static Gate h(Qubit q);
  static Gate cnot(Qubit control, Qubit target);
  static Gate toffoli(Qubit c0, Qubit c1, Qubit target);
  static Gate phase(Qubit q, double theta);
  static Gate cphase(Qubit control, Qubit target, double theta);
  static Gate rz(Qubit q, double theta);
  static Gate swap(Qubit a, Qubit b);

  [[nodiscard]] std::size_t arity() const;
  [[nodiscard]] std::span<const Qubit> operands() const {
    return {qubits.data(), arity()};
  }
  [[nodiscard]] bool is_parametric() const;
  [[nodiscard]] bool is_diagonal() const;
  [[nodiscard]] Gate inverse() const;
  [[nodiscard]] bool acts_on(Qubit q) const;

  /// Dense 2^k x 2^k matrix in row-major order, where operand j is local
  /// bit j of the row/column index.
  [[nodiscard]] std::vector<Amplitude> local_matrix() const;

  bool operator==(const Gate&) const = default;
};

/// True when `b` undoes `a` exactly (same kind, same operand set, negated angle).
bool is_inverse_pair(const Gate& a, const Gate& b);

/// Ordered gate list over a fixed register, plus a tracked global phase.
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits, std::string label = {});

  /// Appends a gate after validating its operands against the register.
  Circuit& add(const Gate& gate);
  /// Appends another circuit's gates and global phase. Widths may differ as
  /// long as `other` fits inside this register.
  Circuit& append(const Circuit& other);

  Circuit& x(Qubit q) { return add(Gate::x(q)); }
  Circuit& h(Qubit q) { return add(Gate::h(q)); }
  Circuit& cnot(Qubit c, Qubit t) { return add(Gate::cnot(c, t)); }
  Circuit& toffoli(Qubit c0, Qubit c1, Qubit t) { return add(Gate::toffoli(c0, c1, t)); }
  Circuit& phase(Qubit q, double theta) { return add(Gate::phase(q, theta)); }
  Circuit& cphase(Qubit c, Qubit t, double theta) { return add(Gate::cphase(c, t, theta)); }
  Circuit& rz(Qubit q, double theta) { return add(Gate::rz(q, theta)); }
  Circuit& swap(Qubit a, Qubit b) { return add(Gate::swap(a, b)); }

  /// Reversed gate order with each gate inverted and the global phase negated.
  [[nodiscard]] Circuit inverse() const;

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] const std::vector<Gate>& gates() const { return gates_; }
  [[nodiscard]] std::size_t size() const { return gates_.size(); }
  [[nodiscard]] bool empty() const { return gates_.empty(); }
  [[nodiscard]] const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  [[nodiscard]] double global_phase() const { return global_phase_; }
  void set_global_phase(double phi) { global_phase_ = phi; }
  void add_global_phase(double phi) { global_phase_ += phi; }

  /// Replaces the gate list wholesale; operands are re-validated.
  void set_gates(std::vector<Gate> gates);

  /// Gate count per kind, indexed by GateKind.
  [[nodiscard]] std::array<std::size_t, 8> count_by_kind() const;

  bool operator==(const Circuit&) const = default;

 private:
  void validate(const Gate& gate) const;

  std::size_t n_qubits_ = 0;
  std::vector<Gate> gates_;
  double global_phase_ = 0.0;
  std::string label_;
};

class StateVector {
 public:
  /// |0...0> on `n_qubits` qubits.
  explicit StateVector(std::size_t n_qubits);

  static StateVector basis(std::size_t n_qubits, std::uint64_t index);
  /// Takes ownership of `amps`; length must be a power of two and the norm
  /// must be 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<Amplitude> amps);

  [[nodiscard]] std::size_t n_qubits() const { return n_qubits_; }
  [[nodiscard]] std::size_t dim() const { return amps_.size(); }
  [[nodiscard]] std::span<const Amplitude> amplitudes() const { return amps_; }
  [[nodiscard]] std::span<Amplitude> amplitudes() { return amps_; }
  [[nodiscard]] const Amplitude& operator[](std::size_t k) const { return amps_[k]; }
  [[nodiscard]] double norm_squared() const;

 private:
  StateVector(std::size_t n_qubits, std::vector<Amplitude> amps);

  std::size_t n_qubits_;
  std::vector<Amplitude> amps_;
};

/// Parses an MSB-first bit string ("0001" -> 1).
std::uint64_t parse_basis_label(std::string_view label);
/// Formats `index` as an MSB-first bit string of width `n_qubits`.
std::string basis_label(std::uint64_t index, std::size_t n_qubits);

StateVector prepare_basis_state(std::size_t n_qubits, std::string_view label);

void apply_gate(StateVector& state, const Gate& gate);
void apply_circuit(StateVector& state, const Circuit& circuit);

/// Embeds `state` into a larger register with the extra (high) qubits in |0>.
StateVector extend_with_ancillas(const StateVector& state, std::size_t ancillas);

std::vector<double> probabilities(const StateVector& state);

/// Probabilities of the low `n_low` qubits, summed over the high qubits.
std::vector<double> marginal_probabilities(const StateVector& state, std::size_t n_low);

struct Histogram {
  std::size_t n_qubits = 0;
  std::uint64_t shots = 0;
  std::vector<std::uint64_t> counts;  // indexed by basis state

  bool operator==(const Histogram&) const = default;
};

/// Draws `shots` i.i.d. outcomes from `probs` with a seeded mt19937_64.
/// The mapping from seed to counts is fixed by this library, not by the
/// standard library's distribution implementations.
Histogram sample_distribution(std::span<const double> probs, std::uint64_t shots,
                              std::uint64_t seed);
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

/// 0.5 * sum |p_k - q_k|. Sizes must match.
double total_variation_distance(std::span<const double> p, std::span<const double> q);

/// -sum p_k log2 p_k, with 0 log 0 = 0.
double shannon_entropy(std::span<const double> p);

/// Storage for an n-qubit state when each amplitude is two 32-bit floats.
std::uint64_t estimate_state_memory(std::size_t n_qubits);

}  // namespace ljsim
