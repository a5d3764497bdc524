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

#include "ljsim/qasm.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "ljsim/errors.hpp"
#include "ljsim/io.hpp"

namespace ljsim {
namespace {

std::string_view qasm_name(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::CNOT: return "cx";
    case GateKind::Toffoli: return "ccx";
    case GateKind::Phase: return "u1";
    case GateKind::ControlledPhase: return "cu1";
    case GateKind::Rz: return "rz";
    case GateKind::Swap: return "swap";
  }
  throw ExportError("gate kind " + std::to_string(static_cast<int>(kind)) +
                    " has no OpenQASM 2.0 equivalent");
}

std::optional<GateKind> kind_from_name(std::string_view name) {
  if (name == "x") return GateKind::X;
  if (name == "h") return GateKind::H;
  if (name == "cx") return GateKind::CNOT;
  if (name == "ccx") return GateKind::Toffoli;
  if (name == "u1" || name == "p") return GateKind::Phase;
  if (name == "cu1" || name == "cp") return GateKind::ControlledPhase;
  if (name == "rz") return GateKind::Rz;
  if (name == "swap") return GateKind::Swap;
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_number(std::string_view s, std::size_t line) {
  const std::string text(trim(s));
  char* end = nullptr;
  const double v = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size()) {
    throw ConfigError("line " + std::to_string(line) + ": cannot parse angle '" + text + "'");
  }
  return v;
}

// "q[3]" -> 3
Qubit parse_operand(std::string_view s, const std::string& reg, std::size_t line) {
  s = trim(s);
  const auto open = s.find('[');
  const auto close = s.find(']');
  if (open == std::string_view::npos || close == std::string_view::npos || close < open ||
      trim(s.substr(0, open)) != reg) {
    throw ConfigError("line " + std::to_string(line) + ": bad operand '" + std::string(s) + "'");
  }
  const auto digits = trim(s.substr(open + 1, close - open - 1));
  Qubit q = 0;
  const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw ConfigError("line " + std::to_string(line) + ": bad qubit index '" + std::string(s) + "'");
  }
  return q;
}

}  // namespace

std::string to_qasm(const Circuit& circuit, const QasmOptions& options) {
  if (options.measured_qubits > circuit.n_qubits()) {
    throw ExportError("cannot measure more qubits than the circuit has");
  }
  std::ostringstream out;
  out << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (!circuit.label().empty()) out << "// " << circuit.label() << '\n';
  if (circuit.global_phase() != 0.0) {
    out << "// global_phase " << format_double(circuit.global_phase()) << '\n';
  }
  out << "qreg q[" << circuit.n_qubits() << "];\n";
  if (options.measured_qubits > 0) out << "creg c[" << options.measured_qubits << "];\n";
  for (const auto& g : circuit.gates()) {
    out << qasm_name(g.kind);
    if (g.is_parametric()) out << '(' << format_double(g.angle) << ')';
    out << ' ';
    const auto ops = g.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) out << (i ? "," : "") << "q[" << ops[i] << ']';
    out << ";\n";
  }
  for (std::size_t q = 0; q < options.measured_qubits; ++q) {
    out << "measure q[" << q << "] -> c[" << q << "];\n";
  }
  return out.str();
}

void export_qasm(const Circuit& circuit, const std::filesystem::path& path,
                 const QasmOptions& options) {
  write_text_file(path, to_qasm(circuit, options));
}

Circuit parse_qasm(std::string_view text) {
  std::optional<Circuit> circuit;
  std::string reg;
  double global_phase = 0.0;
  std::string label;

  // Comments first: only "// global_phase <x>" carries meaning.
  std::string code;
  std::size_t line_no = 0;
  std::vector<std::size_t> line_of_offset;
  {
    std::istringstream lines{std::string(text)};
    std::string line;
    while (std::getline(lines, line)) {
      ++line_no;
      std::string_view l = line;
      if (const auto c = l.find("//"); c != std::string_view::npos) {
        const auto comment = trim(l.substr(c + 2));
        constexpr std::string_view kTag = "global_phase";
        if (comment.starts_with(kTag)) {
          global_phase = parse_number(comment.substr(kTag.size()), line_no);
        } else if (label.empty() && !comment.empty()) {
          label = std::string(comment);
        }
        l = l.substr(0, c);
      }
      code.append(l);
      code.push_back('\n');
      line_of_offset.resize(code.size(), line_no);
    }
  }

  std::size_t start = 0;
  while (true) {
    const auto end = code.find(';', start);
    const auto stmt = trim(std::string_view(code).substr(start, end == std::string::npos ? std::string::npos : end - start));
    const std::size_t line = line_of_offset.empty() ? 0 : line_of_offset[std::min(start, line_of_offset.size() - 1)];
    if (end == std::string::npos) {
      if (!stmt.empty()) throw ConfigError("line " + std::to_string(line) + ": missing ';'");
      break;
    }
    start = end + 1;
    if (stmt.empty()) continue;

    if (stmt.starts_with("OPENQASM")) {
      if (trim(stmt.substr(8)) != "2.0") throw ConfigError("only OPENQASM 2.0 is supported");
      continue;
    }
    if (stmt.starts_with("include") || stmt.starts_with("creg") || stmt.starts_with("measure") ||
        stmt.starts_with("barrier")) {
      continue;
    }
    if (stmt.starts_with("qreg")) {
      if (circuit) throw ConfigError("line " + std::to_string(line) + ": only one qreg supported");
      const auto decl = trim(stmt.substr(4));
      const auto open = decl.find('[');
      if (open == std::string_view::npos) throw ConfigError("line " + std::to_string(line) + ": bad qreg");
      reg = std::string(trim(decl.substr(0, open)));
      const auto size = parse_operand(decl, reg, line);
      circuit.emplace(size);
      continue;
    }

    if (!circuit) throw ConfigError("line " + std::to_string(line) + ": gate before qreg");
    std::size_t name_end = 0;
    while (name_end < stmt.size() && (std::isalnum(static_cast<unsigned char>(stmt[name_end])) || stmt[name_end] == '_')) {
      ++name_end;
    }
    const auto name = stmt.substr(0, name_end);
    const auto kind = kind_from_name(name);
    if (!kind) {
      throw ConfigError("line " + std::to_string(line) + ": unsupported gate '" + std::string(name) + "'");
    }
    auto rest = trim(stmt.substr(name_end));
    Gate g;
    g.kind = *kind;
    if (g.is_parametric()) {
      if (rest.empty() || rest.front() != '(') {
        throw ConfigError("line " + std::to_string(line) + ": " + std::string(name) + " needs an angle");
      }
      const auto close = rest.find(')');
      if (close == std::string_view::npos) throw ConfigError("line " + std::to_string(line) + ": missing ')'");
      g.angle = parse_number(rest.substr(1, close - 1), line);
      rest = trim(rest.substr(close + 1));
    }
    std::size_t count = 0;
    while (!rest.empty()) {
      const auto comma = rest.find(',');
      if (count >= 3) throw ConfigError("line " + std::to_string(line) + ": too many operands");
      g.qubits[count++] = parse_operand(rest.substr(0, comma), reg, line);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    if (count != g.arity()) {
      throw ConfigError("line " + std::to_string(line) + ": " + std::string(name) + " expects " +
                        std::to_string(g.arity()) + " operand(s)");
    }
    circuit->add(g);
  }

  if (!circuit) throw ConfigError("QASM program declares no qreg");
  circuit->set_global_phase(global_phase);
  circuit->set_label(label);
  return *std::move(circuit);
}

}  // namespace ljsim
