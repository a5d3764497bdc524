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

#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace ljsim {

/// Real phases (or energies, the caller tracks which) on the diagonal of a
/// 2^n x 2^n operator, indexed by basis state.
struct DiagonalOperator {
  std::vector<double> phases;
  std::string label;

  [[nodiscard]] std::size_t size() const { return phases.size(); }
  /// log2(size()); throws ConfigError unless size() is a power of two >= 2.
  [[nodiscard]] std::size_t n_qubits() const;
  /// Every entry multiplied by `factor`.
  [[nodiscard]] DiagonalOperator scaled(double factor, std::string new_label = {}) const;

  bool operator==(const DiagonalOperator&) const = default;
};

}  // namespace ljsim
