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

#include "ljsim/engine.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <cmath>
#include <numbers>
#include <random>
#include <utility>

#include "ljsim/errors.hpp"

namespace ljsim {
namespace {

constexpr std::uint64_t bit(Qubit q) { return std::uint64_t{1} << q; }

Gate make(GateKind kind, std::initializer_list<Qubit> qs, double angle = 0.0) {
  Gate g;
  g.kind = kind;
  std::copy(qs.begin(), qs.end(), g.qubits.begin());
  g.angle = angle;
  return g;
}

// Inserts a zero bit at position q into `i`; iterating i over [0, dim/2)
// enumerates every index whose bit q is clear.
constexpr std::uint64_t insert_zero(std::uint64_t i, Qubit q) {
  const std::uint64_t low = i & (bit(q) - 1);
  return ((i >> q) << (q + 1)) | low;
}

void check_qubits(std::size_t n) {
  if (n == 0) throw ConfigError("state must have at least one qubit");
  if (n > kMaxQubits) {
    throw ResourceError("state of " + std::to_string(n) + " qubits exceeds limit of " +
                        std::to_string(kMaxQubits));
  }
}

}  // namespace

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::CNOT: return "CNOT";
    case GateKind::Toffoli: return "Toffoli";
    case GateKind::Phase: return "Phase";
    case GateKind::ControlledPhase: return "ControlledPhase";
    case GateKind::Rz: return "Rz";
    case GateKind::Swap: return "Swap";
  }
  return "?";
}

Gate Gate::x(Qubit q) { return make(GateKind::X, {q}); }
Gate Gate::h(Qubit q) { return make(GateKind::H, {q}); }
Gate Gate::cnot(Qubit c, Qubit t) { return make(GateKind::CNOT, {c, t}); }
Gate Gate::toffoli(Qubit c0, Qubit c1, Qubit t) { return make(GateKind::Toffoli, {c0, c1, t}); }
Gate Gate::phase(Qubit q, double theta) { return make(GateKind::Phase, {q}, theta); }
Gate Gate::cphase(Qubit c, Qubit t, double theta) {
  return make(GateKind::ControlledPhase, {c, t}, theta);
}
Gate Gate::rz(Qubit q, double theta) { return make(GateKind::Rz, {q}, theta); }
Gate Gate::swap(Qubit a, Qubit b) { return make(GateKind::Swap, {a, b}); }

std::size_t Gate::arity() const {
  switch (kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Phase:
    case GateKind::Rz:
      return 1;
    case GateKind::CNOT:
    case GateKind::ControlledPhase:
    case GateKind::Swap:
      return 2;
    case GateKind::Toffoli:
      return 3;
  }
  return 0;
}

bool Gate::is_parametric() const {
  return kind == GateKind::Phase || kind == GateKind::ControlledPhase || kind == GateKind::Rz;
}

bool Gate::is_diagonal() const { return is_parametric(); }

Gate Gate::inverse() const {
  Gate g = *this;
  if (is_parametric()) g.angle = -angle;
  return g;
}

bool Gate::acts_on(Qubit q) const {
  const auto ops = operands();
  return std::find(ops.begin(), ops.end(), q) != ops.end();
}

std::vector<Amplitude> Gate::local_matrix() const {
  const std::size_t d = std::size_t{1} << arity();
  std::vector<Amplitude> m(d * d, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> Amplitude& { return m[r * d + c]; };
  const Amplitude eith = std::polar(1.0, angle);
  switch (kind) {
    case GateKind::X:
      at(0, 1) = at(1, 0) = 1.0;
      break;
    case GateKind::H: {
      const double s = 1.0 / std::numbers::sqrt2;
      at(0, 0) = at(0, 1) = at(1, 0) = s;
      at(1, 1) = -s;
      break;
    }
    case GateKind::Phase:
      at(0, 0) = 1.0;
      at(1, 1) = eith;
      break;
    case GateKind::Rz:
      at(0, 0) = std::polar(1.0, -angle / 2);
      at(1, 1) = std::polar(1.0, angle / 2);
      break;
    case GateKind::CNOT:
      // operand 0 (bit 0) is the control, operand 1 (bit 1) the target
      at(0, 0) = at(2, 2) = 1.0;
      at(3, 1) = at(1, 3) = 1.0;
      break;
    case GateKind::ControlledPhase:
      at(0, 0) = at(1, 1) = at(2, 2) = 1.0;
      at(3, 3) = eith;
      break;
    case GateKind::Swap:
      at(0, 0) = at(3, 3) = 1.0;
      at(1, 2) = at(2, 1) = 1.0;
      break;
    case GateKind::Toffoli:
      for (std::size_t k = 0; k < 8; ++k) {
        const std::size_t image = (k & 3) == 3 ? k ^ 4 : k;
        at(image, k) = 1.0;
      }
      break;
  }
  return m;
}

bool is_inverse_pair(const Gate& a, const Gate& b) {
  if (a.kind != b.kind) return false;
  const auto& qa = a.qubits;
  const auto& qb = b.qubits;
  bool same_operands = false;
  switch (a.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Phase:
    case GateKind::Rz:
      same_operands = qa[0] == qb[0];
      break;
    case GateKind::CNOT:
      same_operands = qa[0] == qb[0] && qa[1] == qb[1];
      break;
    case GateKind::ControlledPhase:
    case GateKind::Swap:
      same_operands = (qa[0] == qb[0] && qa[1] == qb[1]) || (qa[0] == qb[1] && qa[1] == qb[0]);
      break;
    case GateKind::Toffoli:
      same_operands = qa[2] == qb[2] && ((qa[0] == qb[0] && qa[1] == qb[1]) ||
                                         (qa[0] == qb[1] && qa[1] == qb[0]));
      break;
  }
  if (!same_operands) return false;
  if (!a.is_parametric()) return true;
  return std::abs(a.angle + b.angle) <= 1e-15 * std::max(1.0, std::abs(a.angle));
}

Circuit::Circuit(std::size_t n_qubits, std::string label)
    : n_qubits_(n_qubits), label_(std::move(label)) {
  if (n_qubits == 0) throw ConfigError("circuit must have at least one qubit");
}

void Circuit::validate(const Gate& gate) const {
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] >= n_qubits_) {
      throw ConfigError(std::string(gate_name(gate.kind)) + " operand q[" +
                        std::to_string(ops[i]) + "] out of range for " +
                        std::to_string(n_qubits_) + "-qubit circuit");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) {
        throw ConfigError(std::string(gate_name(gate.kind)) + " has repeated operand q[" +
                          std::to_string(ops[i]) + "]");
      }
    }
  }
  if (!std::isfinite(gate.angle)) throw ConfigError("gate angle must be finite");
}

Circuit& Circuit::add(const Gate& gate) {
  validate(gate);
  gates_.push_back(gate);
  return *this;
}

Circuit& Circuit::append(const Circuit& other) {
  if (other.n_qubits_ > n_qubits_) {
    throw ConfigError("cannot append a " + std::to_string(other.n_qubits_) +
                      "-qubit circuit to a " + std::to_string(n_qubits_) + "-qubit circuit");
  }
  gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
  global_phase_ += other.global_phase_;
  return *this;
}

Circuit Circuit::inverse() const {
  Circuit inv(n_qubits_, label_.empty() ? label_ : label_ + "_dg");
  inv.gates_.reserve(gates_.size());
  for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) inv.gates_.push_back(it->inverse());
  inv.global_phase_ = -global_phase_;
  return inv;
}

void Circuit::set_gates(std::vector<Gate> gates) {
  for (const auto& g : gates) validate(g);
  gates_ = std::move(gates);
}

std::array<std::size_t, 8> Circuit::count_by_kind() const {
  std::array<std::size_t, 8> counts{};
  for (const auto& g : gates_) ++counts[static_cast<std::size_t>(g.kind)];
  return counts;
}

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  check_qubits(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Amplitude{0.0, 0.0});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Amplitude> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(std::size_t n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw ConfigError("basis index " + std::to_string(index) + " out of range for " +
                      std::to_string(n_qubits) + " qubits");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(std::vector<Amplitude> amps) {
  const std::size_t d = amps.size();
  if (d < 2 || (d & (d - 1)) != 0) {
    throw ConfigError("amplitude count " + std::to_string(d) + " is not a power of two >= 2");
  }
  const auto n = static_cast<std::size_t>(std::countr_zero(d));
  check_qubits(n);
  double norm = 0.0;
  for (const auto& a : amps) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw ConfigError("amplitudes must be finite");
    }
    norm += std::norm(a);
  }
  if (std::abs(norm - 1.0) > 1e-10) {
    throw ConfigError("amplitudes are not normalized (sum |a|^2 = " + std::to_string(norm) + ")");
  }
  return StateVector(n, std::move(amps));
}

double StateVector::norm_squared() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return s;
}

std::uint64_t parse_basis_label(std::string_view label) {
  if (label.empty() || label.size() > 64) {
    throw ConfigError("basis label must have between 1 and 64 bits");
  }
  std::uint64_t index = 0;
  for (char c : label) {
    if (c != '0' && c != '1') {
      throw ConfigError("basis label '" + std::string(label) + "' contains non-binary digit");
    }
    index = (index << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return index;
}

std::string basis_label(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t b = 0; b < n_qubits; ++b) {
    if ((index >> b) & 1U) s[n_qubits - 1 - b] = '1';
  }
  return s;
}

StateVector prepare_basis_state(std::size_t n_qubits, std::string_view label) {
  if (label.size() != n_qubits) {
    throw ConfigError("basis label '" + std::string(label) + "' has " +
                      std::to_string(label.size()) + " bits, expected " +
                      std::to_string(n_qubits));
  }
  return StateVector::basis(n_qubits, parse_basis_label(label));
}

void apply_gate(StateVector& state, const Gate& gate) {
  const std::size_t n = state.n_qubits();
  const auto ops = gate.operands();
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i] >= n) {
      throw ConfigError(std::string(gate_name(gate.kind)) + " operand q[" +
                        std::to_string(ops[i]) + "] out of range for " + std::to_string(n) +
                        "-qubit state");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (ops[i] == ops[j]) throw ConfigError("gate has repeated operand");
    }
  }

  auto amps = state.amplitudes();
  const std::uint64_t dim = amps.size();
  const std::uint64_t half = dim >> 1;

  switch (gate.kind) {
    case GateKind::X: {
      const Qubit q = ops[0];
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t k = insert_zero(i, q);
        std::swap(amps[k], amps[k | bit(q)]);
      }
      break;
    }
    case GateKind::H: {
      const Qubit q = ops[0];
      const double s = 1.0 / std::numbers::sqrt2;
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t k0 = insert_zero(i, q);
        const std::uint64_t k1 = k0 | bit(q);
        const Amplitude a = amps[k0];
        const Amplitude b = amps[k1];
        amps[k0] = s * (a + b);
        amps[k1] = s * (a - b);
      }
      break;
    }
    case GateKind::Phase: {
      const Qubit q = ops[0];
      const Amplitude f = std::polar(1.0, gate.angle);
      for (std::uint64_t i = 0; i < half; ++i) amps[insert_zero(i, q) | bit(q)] *= f;
      break;
    }
    case GateKind::Rz: {
      const Qubit q = ops[0];
      const Amplitude f0 = std::polar(1.0, -gate.angle / 2);
      const Amplitude f1 = std::polar(1.0, gate.angle / 2);
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t k0 = insert_zero(i, q);
        amps[k0] *= f0;
        amps[k0 | bit(q)] *= f1;
      }
      break;
    }
    case GateKind::CNOT: {
      const std::uint64_t c = bit(ops[0]);
      const Qubit t = ops[1];
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t k = insert_zero(i, t);
        if (k & c) std::swap(amps[k], amps[k | bit(t)]);
      }
      break;
    }
    case GateKind::ControlledPhase: {
      const std::uint64_t mask = bit(ops[0]) | bit(ops[1]);
      const Amplitude f = std::polar(1.0, gate.angle);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & mask) == mask) amps[k] *= f;
      }
      break;
    }
    case GateKind::Swap: {
      const std::uint64_t a = bit(ops[0]);
      const std::uint64_t b = bit(ops[1]);
      for (std::uint64_t k = 0; k < dim; ++k) {
        if ((k & a) && !(k & b)) std::swap(amps[k], amps[(k ^ a) | b]);
      }
      break;
    }
    case GateKind::Toffoli: {
      const std::uint64_t cmask = bit(ops[0]) | bit(ops[1]);
      const Qubit t = ops[2];
      for (std::uint64_t i = 0; i < half; ++i) {
        const std::uint64_t k = insert_zero(i, t);
        if ((k & cmask) == cmask) std::swap(amps[k], amps[k | bit(t)]);
      }
      break;
    }
  }
}

void apply_circuit(StateVector& state, const Circuit& circuit) {
  if (circuit.n_qubits() != state.n_qubits()) {
    throw ConfigError("circuit has " + std::to_string(circuit.n_qubits()) +
                      " qubits but state has " + std::to_string(state.n_qubits()));
  }
  for (const auto& g : circuit.gates()) apply_gate(state, g);
  if (circuit.global_phase() != 0.0) {
    const Amplitude f = std::polar(1.0, circuit.global_phase());
    for (auto& a : state.amplitudes()) a *= f;
  }
}

StateVector extend_with_ancillas(const StateVector& state, std::size_t ancillas) {
  StateVector out(state.n_qubits() + ancillas);
  auto dst = out.amplitudes();
  std::fill(dst.begin(), dst.end(), Amplitude{0.0, 0.0});
  const auto src = state.amplitudes();
  std::copy(src.begin(), src.end(), dst.begin());
  return out;
}

std::vector<double> probabilities(const StateVector& state) {
  std::vector<double> p(state.dim());
  const auto amps = state.amplitudes();
  std::transform(amps.begin(), amps.end(), p.begin(), [](const Amplitude& a) { return std::norm(a); });
  return p;
}

std::vector<double> marginal_probabilities(const StateVector& state, std::size_t n_low) {
  if (n_low == 0 || n_low > state.n_qubits()) {
    throw ConfigError("marginal over " + std::to_string(n_low) + " of " +
                      std::to_string(state.n_qubits()) + " qubits");
  }
  const std::uint64_t low_dim = std::uint64_t{1} << n_low;
  std::vector<double> p(low_dim, 0.0);
  const auto amps = state.amplitudes();
  for (std::uint64_t k = 0; k < amps.size(); ++k) p[k & (low_dim - 1)] += std::norm(amps[k]);
  return p;
}

Histogram sample_distribution(std::span<const double> probs, std::uint64_t shots,
                              std::uint64_t seed) {
  if (shots == 0) throw ConfigError("shots must be at least 1");
  const std::size_t d = probs.size();
  if (d < 2 || (d & (d - 1)) != 0) throw ConfigError("distribution size must be a power of two");

  std::vector<double> cdf(d);
  double acc = 0.0;
  for (std::size_t k = 0; k < d; ++k) {
    if (!(probs[k] >= 0.0)) throw ConfigError("probabilities must be non-negative");
    acc += probs[k];
    cdf[k] = acc;
  }
  if (!(acc > 0.0)) throw ConfigError("distribution has zero mass");

  Histogram hist;
  hist.n_qubits = static_cast<std::size_t>(std::countr_zero(d));
  hist.shots = shots;
  hist.counts.assign(d, 0);

  std::size_t trailing_zeros = 0;
  while (probs[d - 1 - trailing_zeros] == 0.0) ++trailing_zeros;

  std::mt19937_64 rng(seed);
  for (std::uint64_t s = 0; s < shots; ++s) {
    // 53 random bits -> uniform double in [0, 1), scaled to the total mass.
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u can round up to the total mass; fall back to the last non-empty bin.
    if (it == cdf.end()) it = std::prev(cdf.end(), 1 + static_cast<std::ptrdiff_t>(trailing_zeros));
    ++hist.counts[static_cast<std::size_t>(it - cdf.begin())];
  }
  return hist;
}

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  const auto p = probabilities(state);
  return sample_distribution(p, shots, seed);
}

double total_variation_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ConfigError("distributions differ in size");
  double d = 0.0;
  for (std::size_t k = 0; k < p.size(); ++k) d += std::abs(p[k] - q[k]);
  return 0.5 * d;
}

double shannon_entropy(std::span<const double> p) {
  double h = 0.0;
  for (double x : p) {
    if (x > 0.0) h -= x * std::log2(x);
  }
  return h;
}

std::uint64_t estimate_state_memory(std::size_t n_qubits) {
  if (n_qubits == 0) throw ConfigError("qubit count must be at least 1");
  if (n_qubits > 60) throw ResourceError("qubit count too large for a 64-bit byte count");
  return (std::uint64_t{1} << n_qubits) * 2 * sizeof(float);
}

}  // namespace ljsim
