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

// Two particles on a 1-D lattice interacting through a Lennard-Jones pair
// potential: lattice geometry, the potential and kinetic diagonals, and
// global-phase extraction.
//
// Basis index k = i * L + j, where L = 2^qubits_per_particle, i is the
// lattice site held by the high register (q3q2 for two qubits per particle)
// and j the site held by the low register (q1q0). hbar = 1 throughout.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "ljsim/diagonal.hpp"

namespace ljsim {

struct LatticeConfig {
  std::size_t qubits_per_particle = 2;
  double delta_l = 1.0;  // lattice spacing
  double epsilon = 1.0;  // well depth scale
  double sigma = 1.0;    // zero crossing of the potential
  double mass = 0.5;     // per particle
  /// Separation assigned to two particles on the same site; defaults to
  /// delta_l / 2 (mean separation inside one cell).
  std::optional<double> coincident_distance;

  [[nodiscard]] std::size_t lattice_size() const { return std::size_t{1} << qubits_per_particle; }
  [[nodiscard]] std::size_t total_qubits() const { return 2 * qubits_per_particle; }
  [[nodiscard]] double effective_coincident_distance() const {
    return coincident_distance.value_or(delta_l / 2);
  }
  /// Throws ConfigError unless every field is positive and finite.
  void validate() const;
};

enum class PotentialMode {
  Tabulated,  // fixed per-distance-class values for the 4-site lattice
  Formula,    // lj_potential evaluated at relative_distance
};

enum class KineticMode {
  ZeroNyquist,  // momenta {0, pi/2, 0, -pi/2}; 4-site lattice only
  FullNyquist,  // p_l = 2 pi l / 2^n, wrapped above the Nyquist index
};

/// Which terms of H = K_1 + K_2 + V to keep. The partial forms exist for
/// checks where one term is switched off.
enum class HamiltonianParts {
  Full,
  PotentialOnly,
  KineticOnly,
};

/// Potential values for separations 0, 1, 2 and 3 lattice spacings.
inline constexpr double kTabulatedPotential[4] = {0.49024, -0.25, -0.16711175, -0.0901352};

/// epsilon * ((sigma/x)^12 - (sigma/x)^6); DomainError for x <= 0.
double lj_potential(double x, double epsilon, double sigma);

/// |i - j| * delta_l, or the coincident distance when i == j.
double relative_distance(std::size_t i, std::size_t j, const LatticeConfig& config);

/// Position-basis potential over both registers (4^qubits_per_particle entries).
/// Tabulated mode requires qubits_per_particle == 2.
DiagonalOperator potential_diagonal(const LatticeConfig& config, PotentialMode mode);

/// Subtracts the entry of basis state 0 (a coincident-site state) from every
/// entry. Returns the shifted diagonal and the removed constant.
std::pair<DiagonalOperator, double> extract_common_phase(const DiagonalOperator& diag);

/// Single-particle momentum eigenvalues indexed by momentum basis state.
std::vector<double> kinetic_eigenvalues(std::size_t n_qubits, KineticMode mode);

/// p_l^2 / (2 mass) for each momentum basis state of one particle.
DiagonalOperator kinetic_diagonal(std::size_t n_qubits, double mass, KineticMode mode);

}  // namespace ljsim
