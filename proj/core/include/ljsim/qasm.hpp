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

// OpenQASM 2.0 export of engine circuits, and a reader for the same subset.

#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "ljsim/engine.hpp"

namespace ljsim {

struct QasmOptions {
  /// Append a classical register and measure the low `measured_qubits`
  /// qubits (0 = no measurement).
  std::size_t measured_qubits = 0;
};

/// Statements: x, h, cx, ccx, u1, cu1, rz, swap. Angles use 17 significant
/// digits. A nonzero global phase is recorded as a `// global_phase` comment.
std::string to_qasm(const Circuit& circuit, const QasmOptions& options = {});

void export_qasm(const Circuit& circuit, const std::filesystem::path& path,
                 const QasmOptions& options = {});

/// Reads the subset written by to_qasm (one qreg, the gates above, creg,
/// measure and barrier statements, and the global_phase comment).
Circuit parse_qasm(std::string_view text);

}  // namespace ljsim
