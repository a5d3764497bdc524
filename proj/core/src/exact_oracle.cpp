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

#include "ljsim/exact_oracle.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <complex>
#include <string>

#include "ljsim/errors.hpp"
#include "ljsim/qft.hpp"

namespace ljsim {

DenseHermitian DenseHermitian::from_matrix(Eigen::MatrixXcd m) {
  if (m.rows() != m.cols()) throw ConfigError("Hamiltonian must be square");
  if (m.rows() > kMaxDenseDim) throw ResourceError("Hamiltonian dimension exceeds dense limit");
  const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-12) {
    throw NumericError("matrix is not Hermitian (max |H - H^dagger| = " + std::to_string(asym) + ")");
  }
  return DenseHermitian{std::move(m)};
}

double DenseUnitary::unitarity_error() const {
  const auto id = Eigen::MatrixXcd::Identity(matrix.rows(), matrix.cols());
  return (matrix * matrix.adjoint() - id).cwiseAbs().maxCoeff();
}

Eigen::MatrixXcd kinetic_position_matrix(std::size_t qubits_per_particle, double mass,
                                         KineticMode mode) {
  const auto k = kinetic_diagonal(qubits_per_particle, mass, mode);
  const Eigen::MatrixXcd f = qft_reference_matrix(qubits_per_particle);
  Eigen::VectorXcd d(static_cast<Eigen::Index>(k.size()));
  for (Eigen::Index l = 0; l < d.size(); ++l) d(l) = k.phases[static_cast<std::size_t>(l)];
  Eigen::MatrixXcd kx = f.adjoint() * d.asDiagonal() * f;
  // Exact Hermiticity; the product is Hermitian only up to rounding.
  return (kx + kx.adjoint()) / 2.0;
}

DenseHermitian hamiltonian_matrix(const LatticeConfig& config, PotentialMode pmode,
                                  KineticMode kmode, HamiltonianParts parts) {
  config.validate();
  const auto l = static_cast<Eigen::Index>(config.lattice_size());
  const Eigen::Index dim = l * l;
  if (dim > kMaxDenseDim) {
    throw ResourceError("dense Hamiltonian of dimension " + std::to_string(dim) +
                        " exceeds limit " + std::to_string(kMaxDenseDim));
  }

  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
  if (parts != HamiltonianParts::PotentialOnly) {
    const Eigen::MatrixXcd kx = kinetic_position_matrix(config.qubits_per_particle, config.mass, kmode);
    // index = i * L + j; the high register i is the left Kronecker factor.
    for (Eigen::Index i = 0; i < l; ++i) {
      for (Eigen::Index j = 0; j < l; ++j) {
        for (Eigen::Index m = 0; m < l; ++m) {
          h(i * l + j, m * l + j) += kx(i, m);
          h(i * l + j, i * l + m) += kx(j, m);
        }
      }
    }
  }
  if (parts != HamiltonianParts::KineticOnly) {
    const auto v = potential_diagonal(config, pmode);
    for (Eigen::Index k = 0; k < dim; ++k) h(k, k) += v.phases[static_cast<std::size_t>(k)];
  }
  return DenseHermitian::from_matrix(std::move(h));
}

DenseUnitary exact_unitary(const DenseHermitian& h, double t) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h.matrix);
  if (solver.info() != Eigen::Success) throw NumericError("Hermitian eigendecomposition failed");
  const Eigen::MatrixXcd& q = solver.eigenvectors();
  Eigen::VectorXcd phases(h.dim());
  for (Eigen::Index k = 0; k < phases.size(); ++k) {
    phases(k) = std::polar(1.0, -solver.eigenvalues()(k) * t);
  }
  return DenseUnitary{q * phases.asDiagonal() * q.adjoint()};
}

DenseUnitary circuit_unitary(const Circuit& circuit) {
  if (circuit.n_qubits() > 12) {
    throw ResourceError("circuit_unitary limited to 12 qubits, circuit has " +
                        std::to_string(circuit.n_qubits()));
  }
  const auto dim = Eigen::Index{1} << circuit.n_qubits();
  Eigen::MatrixXcd u(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    auto s = StateVector::basis(circuit.n_qubits(), static_cast<std::uint64_t>(k));
    apply_circuit(s, circuit);
    const auto amps = s.amplitudes();
    for (Eigen::Index r = 0; r < dim; ++r) u(r, k) = amps[static_cast<std::size_t>(r)];
  }
  return DenseUnitary{std::move(u)};
}

Eigen::MatrixXcd data_block(const DenseUnitary& u, std::size_t n_data) {
  const auto d = Eigen::Index{1} << n_data;
  if (d > u.dim()) throw ConfigError("data register larger than the unitary");
  return u.matrix.topLeftCorner(d, d);
}

double operator_norm(const Eigen::MatrixXcd& m) {
  constexpr int kMaxIterations = 200;
  constexpr double kTolerance = 1e-12;
  if (m.size() == 0) return 0.0;
  const Eigen::MatrixXcd gram = m.adjoint() * m;
  Eigen::VectorXcd v = Eigen::VectorXcd::Ones(m.cols()) / std::sqrt(static_cast<double>(m.cols()));
  double lambda = 0.0;
  for (int it = 0; it < kMaxIterations; ++it) {
    const Eigen::VectorXcd w = gram * v;
    const double next = w.norm();
    if (next == 0.0) return 0.0;
    v = w / next;
    const bool converged = std::abs(next - lambda) <= kTolerance * next;
    lambda = next;
    if (converged) return std::sqrt(lambda);
  }
  // Nearly degenerate top singular values stall the iteration.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw NumericError("operator norm eigensolve failed");
  return std::sqrt(std::max(0.0, solver.eigenvalues().maxCoeff()));
}

double trotter_error(const TrotterPlan& plan) {
  const auto step = circuit_unitary(build_step_circuit(plan));
  const auto exact = exact_unitary(
      hamiltonian_matrix(plan.config, plan.potential_mode, plan.kinetic_mode, plan.parts), plan.dt);
  return operator_norm(data_block(step, plan.config.total_qubits()) - exact.matrix);
}

}  // namespace ljsim
