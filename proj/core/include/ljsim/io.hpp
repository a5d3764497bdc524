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

// Result documents and their JSON, CSV and SVG renderings. JSON is the
// canonical form; CSV and SVG are views derived from it.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ljsim {

/// Echo of the run configuration that produced a document.
struct ConfigEcho {
  std::string command;
  std::string initial;
  double dt = 0.0;
  std::size_t steps = 0;
  double t_final = 0.0;
  std::string potential_mode;
  std::string kinetic_mode;
  std::string backend;
  std::optional<std::uint64_t> shots;
  std::optional<std::uint64_t> seed;

  bool operator==(const ConfigEcho&) const = default;
};

struct RunRecord {
  std::size_t step = 0;
  std::vector<double> probabilities;
  std::optional<std::vector<std::uint64_t>> counts;

  bool operator==(const RunRecord&) const = default;
};

struct ResultDocument {
  ConfigEcho config;
  std::size_t n_qubits = 0;
  std::vector<RunRecord> records;
  std::string tool_version;
  /// Only set when timing was requested; otherwise output is byte-stable.
  std::optional<double> wall_time_seconds;

  bool operator==(const ResultDocument&) const = default;
};

enum class OutputFormat { Json, Csv, Svg };

/// Library version string.
std::string_view tool_version();

std::string to_json(const ResultDocument& doc);
/// Throws ConfigError on malformed or incomplete input.
ResultDocument result_from_json(std::string_view text);

/// Columns iteration,state_bits,probability,counts; states in index order.
std::string to_csv(std::span<const RunRecord> records, std::size_t n_qubits);

/// Static bar chart of one record, one bar per basis state.
std::string render_svg_histogram(const RunRecord& record, std::size_t n_qubits,
                                 std::string_view title = {});

/// Writes one record in `format` to `path`.
void emit_histogram(const RunRecord& record, std::size_t n_qubits,
                    const std::filesystem::path& path, OutputFormat format);

/// Writes `content` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, std::string_view content);
std::string read_text_file(const std::filesystem::path& path);

/// "%.17g" rendering used wherever doubles are written as text.
std::string format_double(double v);

}  // namespace ljsim
