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

#include "ljsim/lj_model.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

#include "ljsim/errors.hpp"

namespace ljsim {
namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError(std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void LatticeConfig::validate() const {
  if (qubits_per_particle == 0) throw ConfigError("qubits_per_particle must be at least 1");
  if (qubits_per_particle > 10) throw ResourceError("qubits_per_particle larger than 10");
  require_positive(delta_l, "delta_l");
  require_positive(epsilon, "epsilon");
  require_positive(sigma, "sigma");
  require_positive(mass, "mass");
  require_positive(effective_coincident_distance(), "coincident_distance");
}

double lj_potential(double x, double epsilon, double sigma) {
  if (!(x > 0.0)) throw DomainError("Lennard-Jones potential is singular for x <= 0");
  const double s6 = std::pow(sigma / x, 6);
  return epsilon * (s6 * s6 - s6);
}

double relative_distance(std::size_t i, std::size_t j, const LatticeConfig& config) {
  const std::size_t l = config.lattice_size();
  if (i >= l || j >= l) {
    throw ConfigError("lattice index out of range: (" + std::to_string(i) + ", " +
                      std::to_string(j) + ") with " + std::to_string(l) + " sites");
  }
  if (i == j) return config.effective_coincident_distance();
  const std::size_t sep = i > j ? i - j : j - i;
  return static_cast<double>(sep) * config.delta_l;
}

DiagonalOperator potential_diagonal(const LatticeConfig& config, PotentialMode mode) {
  config.validate();
  if (mode == PotentialMode::Tabulated && config.qubits_per_particle != 2) {
    throw UnsupportedError("tabulated potential is only defined for 2 qubits per particle");
  }
  const std::size_t l = config.lattice_size();
  DiagonalOperator v{std::vector<double>(l * l),
                     mode == PotentialMode::Tabulated ? "V_table" : "V_formula"};
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      const std::size_t sep = i > j ? i - j : j - i;
      v.phases[i * l + j] =
          mode == PotentialMode::Tabulated
              ? kTabulatedPotential[sep]
              : lj_potential(relative_distance(i, j, config), config.epsilon, config.sigma);
    }
  }
  return v;
}

std::pair<DiagonalOperator, double> extract_common_phase(const DiagonalOperator& diag) {
  if (diag.phases.empty()) return {diag, 0.0};
  const double c = diag.phases.front();
  DiagonalOperator shifted = diag;
  for (auto& p : shifted.phases) p -= c;
  return {std::move(shifted), c};
}

std::vector<double> kinetic_eigenvalues(std::size_t n_qubits, KineticMode mode) {
  if (n_qubits == 0) throw ConfigError("kinetic operator needs at least one qubit");
  constexpr double pi = std::numbers::pi;
  if (mode == KineticMode::ZeroNyquist) {
    if (n_qubits != 2) {
      throw UnsupportedError("zero-Nyquist momenta are only defined for a 4-site lattice (n = 2)");
    }
    return {0.0, pi / 2, 0.0, -pi / 2};
  }
  if (n_qubits > 20) throw ResourceError("kinetic register larger than 20 qubits");
  const std::size_t dim = std::size_t{1} << n_qubits;
  const std::size_t nyquist = dim / 2;
  const double dp = 2.0 * pi / static_cast<double>(dim);
  std::vector<double> p(dim);
  for (std::size_t l = 0; l < dim; ++l) {
    p[l] = l <= nyquist ? dp * static_cast<double>(l)
                        : dp * (static_cast<double>(nyquist) - static_cast<double>(l));
  }
  return p;
}

DiagonalOperator kinetic_diagonal(std::size_t n_qubits, double mass, KineticMode mode) {
  require_positive(mass, "mass");
  const auto p = kinetic_eigenvalues(n_qubits, mode);
  DiagonalOperator k{std::vector<double>(p.size()), "K"};
  for (std::size_t l = 0; l < p.size(); ++l) k.phases[l] = p[l] * p[l] / (2.0 * mass);
  return k;
}

}  // namespace ljsim
