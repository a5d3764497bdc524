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

// Dense ground truth for the two-particle lattice model.

#pragma once

#include <Eigen/Dense>
#include <cstddef>

#include "ljsim/engine.hpp"
#include "ljsim/lj_model.hpp"
#include "ljsim/trotter.hpp"

namespace ljsim {

/// Largest Hilbert-space dimension the dense routines accept.
inline constexpr Eigen::Index kMaxDenseDim = 4096;

struct DenseHermitian {
  Eigen::MatrixXcd matrix;

  /// Wraps `m`, checking squareness and m == m^dagger within 1e-12.
  static DenseHermitian from_matrix(Eigen::MatrixXcd m);
  [[nodiscard]] Eigen::Index dim() const { return matrix.rows(); }
};

struct DenseUnitary {
  Eigen::MatrixXcd matrix;

  [[nodiscard]] Eigen::Index dim() const { return matrix.rows(); }
  /// max |U U^dagger - I| entrywise.
  [[nodiscard]] double unitarity_error() const;
};

/// F^dagger K F for one particle: the kinetic operator in the position basis.
Eigen::MatrixXcd kinetic_position_matrix(std::size_t qubits_per_particle, double mass,
                                         KineticMode mode);

/// H = K (x) I + I (x) K + V with the high register as the left factor.
DenseHermitian hamiltonian_matrix(const LatticeConfig& config, PotentialMode pmode,
                                  KineticMode kmode,
                                  HamiltonianParts parts = HamiltonianParts::Full);

/// exp(-i H t) as Q exp(-i Lambda t) Q^dagger.
DenseUnitary exact_unitary(const DenseHermitian& h, double t);

/// Column k is the circuit applied to basis state k (global phase included).
DenseUnitary circuit_unitary(const Circuit& circuit);

/// Block of `u` acting on the low `n_data` qubits with all higher qubits |0>.
Eigen::MatrixXcd data_block(const DenseUnitary& u, std::size_t n_data);

/// Largest singular value by power iteration on M^dagger M (200 iterations
/// max, relative tolerance 1e-12, start vector all-ones normalized).
double operator_norm(const Eigen::MatrixXcd& m);

/// Operator-norm distance between the step circuit (data block) and
/// exp(-i H dt).
double trotter_error(const TrotterPlan& plan);

}  // namespace ljsim
