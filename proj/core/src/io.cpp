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

#include "ljsim/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "ljsim/engine.hpp"
#include "ljsim/errors.hpp"

#ifndef LJSIM_VERSION
#define LJSIM_VERSION "0.0.0"
#endif

namespace ljsim {
namespace {

using Json = nlohmann::ordered_json;

Json config_to_json(const ConfigEcho& c) {
  Json j;
  j["command"] = c.command;
  j["initial"] = c.initial;
  j["dt"] = c.dt;
  j["steps"] = c.steps;
  j["t_final"] = c.t_final;
  j["potential_mode"] = c.potential_mode;
  j["kinetic_mode"] = c.kinetic_mode;
  j["backend"] = c.backend;
  if (c.shots) j["shots"] = *c.shots;
  if (c.seed) j["seed"] = *c.seed;
  return j;
}

ConfigEcho config_from_json(const Json& j) {
  ConfigEcho c;
  c.command = j.at("command").get<std::string>();
  c.initial = j.at("initial").get<std::string>();
  c.dt = j.at("dt").get<double>();
  c.steps = j.at("steps").get<std::size_t>();
  c.t_final = j.at("t_final").get<double>();
  c.potential_mode = j.at("potential_mode").get<std::string>();
  c.kinetic_mode = j.at("kinetic_mode").get<std::string>();
  c.backend = j.at("backend").get<std::string>();
  if (j.contains("shots")) c.shots = j.at("shots").get<std::uint64_t>();
  if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
  return c;
}

}  // namespace

std::string_view tool_version() { return LJSIM_VERSION; }

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string to_json(const ResultDocument& doc) {
  Json j;
  j["tool_version"] = doc.tool_version;
  j["config"] = config_to_json(doc.config);
  j["n_qubits"] = doc.n_qubits;
  Json records = Json::array();
  for (const auto& r : doc.records) {
    Json jr;
    jr["step"] = r.step;
    jr["probabilities"] = r.probabilities;
    if (r.counts) jr["counts"] = *r.counts;
    records.push_back(std::move(jr));
  }
  j["records"] = std::move(records);
  if (doc.wall_time_seconds) j["wall_time_seconds"] = *doc.wall_time_seconds;
  return j.dump(2) + "\n";
}

ResultDocument result_from_json(std::string_view text) {
  try {
    const Json j = Json::parse(text);
    ResultDocument doc;
    doc.tool_version = j.at("tool_version").get<std::string>();
    doc.config = config_from_json(j.at("config"));
    doc.n_qubits = j.at("n_qubits").get<std::size_t>();
    for (const auto& jr : j.at("records")) {
      RunRecord r;
      r.step = jr.at("step").get<std::size_t>();
      r.probabilities = jr.at("probabilities").get<std::vector<double>>();
      if (jr.contains("counts")) r.counts = jr.at("counts").get<std::vector<std::uint64_t>>();
      doc.records.push_back(std::move(r));
    }
    if (j.contains("wall_time_seconds")) {
      doc.wall_time_seconds = j.at("wall_time_seconds").get<double>();
    }
    return doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("malformed result document: ") + e.what());
  }
}

std::string to_csv(std::span<const RunRecord> records, std::size_t n_qubits) {
  std::ostringstream out;
  out << "iteration,state_bits,probability,counts\n";
  for (const auto& r : records) {
    for (std::size_t k = 0; k < r.probabilities.size(); ++k) {
      out << r.step << ',' << basis_label(k, n_qubits) << ',' << format_double(r.probabilities[k])
          << ',';
      if (r.counts) out << (*r.counts)[k];
      out << '\n';
    }
  }
  return out.str();
}

std::string render_svg_histogram(const RunRecord& record, std::size_t n_qubits,
                                 std::string_view title) {
  constexpr int kBarWidth = 32;
  constexpr int kGap = 8;
  constexpr int kPlotHeight = 240;
  constexpr int kMarginLeft = 48;
  constexpr int kMarginTop = 36;
  constexpr int kMarginBottom = 56;
  const int bars = static_cast<int>(record.probabilities.size());
  const int width = kMarginLeft + bars * (kBarWidth + kGap) + kGap;
  const int height = kMarginTop + kPlotHeight + kMarginBottom;
  const int baseline = kMarginTop + kPlotHeight;

  char buf[256];
  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
         "font-size=\"14\">"
      << (title.empty() ? "iteration " + std::to_string(record.step) : std::string(title))
      << "</text>\n";
  for (int tick = 0; tick <= 4; ++tick) {
    const double y = baseline - kPlotHeight * tick / 4.0;
    std::snprintf(buf, sizeof buf,
                  "<line x1=\"%d\" y1=\"%.2f\" x2=\"%d\" y2=\"%.2f\" stroke=\"#ddd\"/>\n"
                  "<text x=\"%d\" y=\"%.2f\" text-anchor=\"end\" font-family=\"sans-serif\" "
                  "font-size=\"10\">%.2f</text>\n",
                  kMarginLeft, y, width - kGap, y, kMarginLeft - 4, y + 3, tick / 4.0);
    svg << buf;
  }
  for (int k = 0; k < bars; ++k) {
    const double p = record.probabilities[static_cast<std::size_t>(k)];
    const double h = p * kPlotHeight;
    const int x = kMarginLeft + kGap + k * (kBarWidth + kGap);
    std::snprintf(buf, sizeof buf,
                  "<rect class=\"bar\" x=\"%d\" y=\"%.4f\" width=\"%d\" height=\"%.4f\" "
                  "fill=\"#4a7bd0\"><title>%.6f</title></rect>\n",
                  x, baseline - h, kBarWidth, h, p);
    svg << buf;
    svg << "<text x=\"" << x + kBarWidth / 2 << "\" y=\"" << baseline + 14
        << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"10\">"
        << basis_label(static_cast<std::uint64_t>(k), n_qubits) << "</text>\n";
  }
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << baseline << "\" x2=\"" << width - kGap
      << "\" y2=\"" << baseline << "\" stroke=\"black\"/>\n";
  svg << "</svg>\n";
  return svg.str();
}

void emit_histogram(const RunRecord& record, std::size_t n_qubits,
                    const std::filesystem::path& path, OutputFormat format) {
  switch (format) {
    case OutputFormat::Csv:
      write_text_file(path, to_csv(std::span(&record, 1), n_qubits));
      break;
    case OutputFormat::Svg:
      write_text_file(path, render_svg_histogram(record, n_qubits));
      break;
    case OutputFormat::Json: {
      ResultDocument doc;
      doc.n_qubits = n_qubits;
      doc.records.push_back(record);
      doc.tool_version = std::string(tool_version());
      write_text_file(path, to_json(doc));
      break;
    }
  }
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::error_code ec;
  if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path(), ec);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace ljsim
