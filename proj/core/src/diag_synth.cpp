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

#include "ljsim/diag_synth.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "ljsim/errors.hpp"

namespace ljsim {
namespace {

struct Registers {
  std::vector<Qubit> data;      // data[0] is the least significant bit
  std::vector<Qubit> ancillas;
};

// Flips + ladder for `index` over `regs`. Returns the fragment with its
// phase location; the prologue has width `width`.
FilterFragment build_filter(std::uint64_t index, const Registers& regs, std::size_t width) {
  const std::size_t n = regs.data.size();
  const std::size_t needed = ladder_ancillas_required(n);
  if (regs.ancillas.size() < needed) {
    throw ConfigError("filtering a " + std::to_string(n) + "-qubit register needs " +
                      std::to_string(needed) + " ancilla(s), plan has " +
                      std::to_string(regs.ancillas.size()));
  }

  FilterFragment f{Circuit(width), std::nullopt, 0};
  for (std::size_t b = 0; b < n; ++b) {
    if (((index >> b) & 1U) == 0) f.prologue.x(regs.data[b]);
  }
  if (n == 1) {
    f.phase_target = regs.data[0];
    return f;
  }
  if (n == 2) {
    f.phase_control = regs.data[0];
    f.phase_target = regs.data[1];
    return f;
  }
  f.prologue.toffoli(regs.data[0], regs.data[1], regs.ancillas[0]);
  for (std::size_t b = 2; b + 1 < n; ++b) {
    f.prologue.toffoli(regs.ancillas[b - 2], regs.data[b], regs.ancillas[b - 1]);
  }
  f.phase_control = regs.ancillas[n - 3];
  f.phase_target = regs.data[n - 1];
  return f;
}

// Most frequent value; ties go to the lowest index.
double dominant_value(std::span<const double> values) {
  std::map<double, std::size_t> freq;
  for (double v : values) ++freq[v];
  double best = values.front();
  std::size_t best_count = 0;
  for (double v : values) {
    const std::size_t c = freq[v];
    if (c > best_count) {
      best = v;
      best_count = c;
    }
  }
  return best;
}

void emit_filtered_phases(Circuit& out, std::span<const double> phases, const Registers& regs) {
  const double reference = dominant_value(phases);
  out.add_global_phase(reference);
  for (std::uint64_t k = 0; k < phases.size(); ++k) {
    const double theta = phases[k] - reference;
    if (theta == 0.0) continue;
    out.append(build_filter(k, regs, out.n_qubits()).wrap(theta));
  }
}

Registers make_registers(std::size_t n_data, std::size_t data_used, std::size_t ancillas) {
  Registers r;
  r.data.resize(data_used);
  std::iota(r.data.begin(), r.data.end(), Qubit{0});
  r.ancillas.resize(ancillas);
  std::iota(r.ancillas.begin(), r.ancillas.end(), static_cast<Qubit>(n_data));
  return r;
}

}  // namespace

std::size_t ladder_ancillas_required(std::size_t n_register_qubits) {
  return n_register_qubits > 2 ? n_register_qubits - 2 : 0;
}

Gate FilterFragment::phase_gate(double theta) const {
  return phase_control ? Gate::cphase(*phase_control, phase_target, theta)
                       : Gate::phase(phase_target, theta);
}

Circuit FilterFragment::wrap(double theta) const {
  Circuit c = prologue;
  c.add(phase_gate(theta));
  c.append(prologue.inverse());
  return c;
}

FilterFragment filter_state(std::string_view target, const SynthesisPlan& plan) {
  if (target.size() != plan.n_data_qubits) {
    throw ConfigError("filter target '" + std::string(target) + "' has " +
                      std::to_string(target.size()) + " bits, plan has " +
                      std::to_string(plan.n_data_qubits) + " data qubits");
  }
  const auto regs = make_registers(plan.n_data_qubits, plan.n_data_qubits, plan.ancilla_count);
  return build_filter(parse_basis_label(target), regs, plan.total_qubits());
}

std::optional<FoldResult> fold_symmetry(const DiagonalOperator& diag) {
  const std::size_t n = diag.n_qubits();
  if (n < 2) return std::nullopt;
  const std::uint64_t dim = diag.size();
  const std::uint64_t mask = dim - 1;
  for (std::uint64_t k = 0; k < dim / 2; ++k) {
    if (std::abs(diag.phases[k] - diag.phases[k ^ mask]) > 1e-12) return std::nullopt;
  }

  FoldResult r{Circuit(n, "fold"), {}};
  const auto top = static_cast<Qubit>(n - 1);
  for (Qubit q = 0; q < top; ++q) r.prologue.cnot(top, q);
  // After the prologue, |1 b> has become |1 ~b>, whose phase theta[1 b] ==
  // theta[0 ~b] depends only on the low bits. The top qubit drops out.
  r.half.phases.assign(diag.phases.begin(), diag.phases.begin() + static_cast<std::ptrdiff_t>(dim / 2));
  r.half.label = diag.label.empty() ? "folded" : diag.label + "_folded";
  return r;
}

void append_filtered_diagonal(Circuit& circuit, const DiagonalOperator& diag,
                              std::span<const Qubit> data, std::span<const Qubit> ancillas) {
  if (diag.n_qubits() != data.size()) {
    throw ConfigError("diagonal '" + diag.label + "' does not match a " +
                      std::to_string(data.size()) + "-qubit register");
  }
  const Registers regs{{data.begin(), data.end()}, {ancillas.begin(), ancillas.end()}};
  emit_filtered_phases(circuit, diag.phases, regs);
}

Circuit synth_diagonal(const DiagonalOperator& diag, const SynthesisPlan& plan) {
  const std::size_t n = diag.n_qubits();
  if (n != plan.n_data_qubits) {
    throw ConfigError("diagonal has " + std::to_string(n) + " qubits, plan has " +
                      std::to_string(plan.n_data_qubits));
  }
  Circuit out(plan.total_qubits(), diag.label.empty() ? "diag" : diag.label);

  std::optional<FoldResult> fold;
  if (plan.use_symmetry_folding) fold = fold_symmetry(diag);

  if (fold) {
    const auto regs = make_registers(n, n - 1, plan.ancilla_count);
    if (regs.ancillas.size() < ladder_ancillas_required(n - 1)) {
      throw ConfigError("folded synthesis of " + std::to_string(n) + " qubits needs " +
                        std::to_string(ladder_ancillas_required(n - 1)) + " ancilla(s)");
    }
    out.append(fold->prologue);
    emit_filtered_phases(out, fold->half.phases, regs);
    out.append(fold->prologue.inverse());
  } else {
    const auto regs = make_registers(n, n, plan.ancilla_count);
    if (regs.ancillas.size() < ladder_ancillas_required(n)) {
      throw ConfigError("synthesis of " + std::to_string(n) + " qubits needs " +
                        std::to_string(ladder_ancillas_required(n)) + " ancilla(s), plan has " +
                        std::to_string(plan.ancilla_count));
    }
    emit_filtered_phases(out, diag.phases, regs);
  }

  return plan.cancel_redundant ? cancel_redundant(out) : out;
}

void append_phase_polynomial(Circuit& circuit, const DiagonalOperator& diag, Qubit offset) {
  const std::size_t m = diag.n_qubits();
  if (offset + m > circuit.n_qubits()) {
    throw ConfigError("phase register does not fit the circuit");
  }
  // Moebius transform: theta[k] = sum over subsets S of k of coeff[S].
  std::vector<double> coeff = diag.phases;
  for (std::size_t b = 0; b < m; ++b) {
    for (std::uint64_t k = 0; k < coeff.size(); ++k) {
      if ((k >> b) & 1U) coeff[k] -= coeff[k ^ (std::uint64_t{1} << b)];
    }
  }
  for (std::uint64_t s = 0; s < coeff.size(); ++s) {
    if (std::popcount(s) > 2 && std::abs(coeff[s]) > 1e-12) {
      throw UnsupportedError("diagonal '" + diag.label +
                             "' has interaction terms beyond qubit pairs");
    }
  }

  circuit.add_global_phase(coeff[0]);
  for (std::size_t b = 0; b < m; ++b) {
    const double c = coeff[std::uint64_t{1} << b];
    if (c == 0.0) continue;
    // Phase(c) = exp(i c / 2) Rz(c)
    circuit.rz(offset + static_cast<Qubit>(b), c);
    circuit.add_global_phase(c / 2);
  }
  for (std::size_t b0 = 0; b0 < m; ++b0) {
    for (std::size_t b1 = b0 + 1; b1 < m; ++b1) {
      const double c = coeff[(std::uint64_t{1} << b0) | (std::uint64_t{1} << b1)];
      if (c == 0.0) continue;
      circuit.cphase(offset + static_cast<Qubit>(b0), offset + static_cast<Qubit>(b1), c);
    }
  }
}

Circuit cancel_redundant(const Circuit& circuit) {
  std::vector<Gate> current = circuit.gates();
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Gate> out;
    out.reserve(current.size());
    for (const auto& g : current) {
      if (g.is_parametric() && g.angle == 0.0) {
        changed = true;
        continue;
      }
      // Nearest earlier gate sharing a qubit with g.
      auto partner = out.rend();
      for (auto it = out.rbegin(); it != out.rend(); ++it) {
        const auto ops = g.operands();
        if (std::any_of(ops.begin(), ops.end(), [&](Qubit q) { return it->acts_on(q); })) {
          partner = it;
          break;
        }
      }
      if (partner != out.rend() && is_inverse_pair(*partner, g)) {
        out.erase(std::next(partner).base());
        changed = true;
      } else {
        out.push_back(g);
      }
    }
    current = std::move(out);
  }
  Circuit result(circuit.n_qubits(), circuit.label());
  result.set_gates(std::move(current));
  result.set_global_phase(circuit.global_phase());
  return result;
}

}  // namespace ljsim
