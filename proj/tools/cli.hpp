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

// Command-line front end: flag parsing, validation and dispatch of the
// simulate / sample / synth / export-qasm / compare / sweep subcommands.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ljsim/io.hpp"
#include "ljsim/lj_model.hpp"
#include "ljsim/trotter.hpp"

namespace ljsim::cli {

/// Bad flags or an invalid combination of them. Maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help was requested; the message carries the help text. Exit code 0.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { Simulate, Sample, Synth, ExportQasm, Compare, Sweep };

enum class CircuitKind { Step, Potential, Kinetic, Qft, InverseQft };

/// Environment variable naming the directory relative output paths resolve
/// against (and the default directory for `sweep`).
inline constexpr const char* kOutputDirEnv = "LJSIM_OUTPUT_DIR";

struct RunConfig {
  Subcommand subcommand = Subcommand::Simulate;
  std::vector<std::string> initials{"0001"};
  std::vector<double> dts{0.05};
  std::optional<std::size_t> steps;  // nullopt: derived from t_final
  double t_final = 1.4142135623730951;
  PotentialMode potential_mode = PotentialMode::Tabulated;
  KineticMode kinetic_mode = KineticMode::ZeroNyquist;
  std::uint64_t shots = 8192;
  std::uint64_t seed = 1;
  Backend backend = Backend::Circuit;
  std::string output;  // empty or "-" means stdout
  OutputFormat format = OutputFormat::Json;
  CircuitKind circuit = CircuitKind::Step;
  std::size_t snapshot_every = 1;
  bool use_symmetry_folding = true;
  bool cancel_redundant = true;
  bool measure = false;
  bool timing = false;

  /// Throws UsageError for anything that would fail before computing.
  void validate() const;
  [[nodiscard]] std::size_t resolved_steps(double dt) const;
  [[nodiscard]] TrotterPlan plan_for(double dt) const;
};

/// Parses and validates argv (argv[0] is the program name). Throws
/// UsageError or HelpRequested.
RunConfig parse_command_line(int argc, const char* const* argv);

/// Executes a validated config. Returns the process exit code.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// parse_command_line + run with the exit-code policy: 0 success, 1 runtime
/// failure, 2 usage error.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Builds the document `simulate` (or `sample`, when `with_counts`) emits.
ResultDocument simulate_document(const RunConfig& config, const std::string& initial, double dt,
                                 bool with_counts);

std::string potential_mode_name(PotentialMode mode);
std::string kinetic_mode_name(KineticMode mode);
std::string backend_name(Backend backend);

}  // namespace ljsim::cli
