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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <future>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "ljsim/diag_synth.hpp"
#include "ljsim/engine.hpp"
#include "ljsim/errors.hpp"
#include "ljsim/exact_oracle.hpp"
#include "ljsim/qasm.hpp"
#include "ljsim/qft.hpp"

namespace ljsim::cli {
namespace {

using Json = nlohmann::ordered_json;

std::string subcommand_name(Subcommand s) {
  switch (s) {
    case Subcommand::Simulate: return "simulate";
    case Subcommand::Sample: return "sample";
    case Subcommand::Synth: return "synth";
    case Subcommand::ExportQasm: return "export-qasm";
    case Subcommand::Compare: return "compare";
    case Subcommand::Sweep: return "sweep";
  }
  return "?";
}

std::string circuit_kind_name(CircuitKind k) {
  switch (k) {
    case CircuitKind::Step: return "step";
    case CircuitKind::Potential: return "potential";
    case CircuitKind::Kinetic: return "kinetic";
    case CircuitKind::Qft: return "qft";
    case CircuitKind::InverseQft: return "iqft";
  }
  return "?";
}

std::string short_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::filesystem::path resolve_output(const std::string& output) {
  std::filesystem::path p(output);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

bool to_stdout(const std::string& output) { return output.empty() || output == "-"; }

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
  if (to_stdout(config.output)) {
    out << text;
  } else {
    write_text_file(resolve_output(config.output), text);
  }
}

ConfigEcho echo(const RunConfig& config, const std::string& initial, double dt, std::size_t steps) {
  ConfigEcho e;
  e.command = subcommand_name(config.subcommand);
  e.initial = initial;
  e.dt = dt;
  e.steps = steps;
  e.t_final = config.t_final;
  e.potential_mode = potential_mode_name(config.potential_mode);
  e.kinetic_mode = kinetic_mode_name(config.kinetic_mode);
  e.backend = backend_name(config.backend);
  if (config.subcommand == Subcommand::Sample) {
    e.shots = config.shots;
    e.seed = config.seed;
  }
  return e;
}

Circuit build_named_circuit(const RunConfig& config, double dt) {
  TrotterPlan plan = config.plan_for(dt);
  switch (config.circuit) {
    case CircuitKind::Step:
      break;
    case CircuitKind::Potential:
      plan.parts = HamiltonianParts::PotentialOnly;
      break;
    case CircuitKind::Kinetic:
      plan.parts = HamiltonianParts::KineticOnly;
      break;
    case CircuitKind::Qft:
    case CircuitKind::InverseQft: {
      const bool inv = config.circuit == CircuitKind::InverseQft;
      Circuit c(4, inv ? "iqft_2x2" : "qft_2x2");
      append_qft(c, {.n_qubits = 2, .inverse = inv, .register_offset = 0});
      append_qft(c, {.n_qubits = 2, .inverse = inv, .register_offset = 2});
      return c;
    }
  }
  Circuit c = build_step_circuit(plan);
  c.set_label(circuit_kind_name(config.circuit));
  return c;
}

// Dense operator the named circuit should implement on the data register.
Eigen::MatrixXcd reference_operator(const RunConfig& config, double dt) {
  const TrotterPlan plan = config.plan_for(dt);
  const auto v = potential_diagonal(plan.config, plan.potential_mode);
  Eigen::VectorXcd vphase(static_cast<Eigen::Index>(v.size()));
  for (Eigen::Index k = 0; k < vphase.size(); ++k) {
    vphase(k) = std::polar(1.0, -dt * v.phases[static_cast<std::size_t>(k)]);
  }
  const Eigen::MatrixXcd kin =
      exact_unitary(hamiltonian_matrix(plan.config, plan.potential_mode, plan.kinetic_mode,
                                       HamiltonianParts::KineticOnly),
                    dt)
          .matrix;
  const Eigen::MatrixXcd f = qft_reference_matrix(2);
  Eigen::MatrixXcd ff(16, 16);
  for (Eigen::Index a = 0; a < 16; ++a) {
    for (Eigen::Index b = 0; b < 16; ++b) ff(a, b) = f(a / 4, b / 4) * f(a % 4, b % 4);
  }
  switch (config.circuit) {
    case CircuitKind::Step: return kin * vphase.asDiagonal();
    case CircuitKind::Potential: return Eigen::MatrixXcd(vphase.asDiagonal());
    case CircuitKind::Kinetic: return kin;
    case CircuitKind::Qft: return ff;
    case CircuitKind::InverseQft: return ff.adjoint();
  }
  return {};
}

int run_simulate(const RunConfig& config, std::ostream& out, bool with_counts) {
  const auto t0 = std::chrono::steady_clock::now();
  ResultDocument doc = simulate_document(config, config.initials.front(), config.dts.front(), with_counts);
  if (config.timing) {
    doc.wall_time_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  }
  switch (config.format) {
    case OutputFormat::Json:
      emit(config, to_json(doc), out);
      break;
    case OutputFormat::Csv:
      emit(config, to_csv(doc.records, doc.n_qubits), out);
      break;
    case OutputFormat::Svg: {
      const auto base = resolve_output(config.output);
      const auto stem = base.stem().string();
      for (const auto& r : doc.records) {
        char suffix[32];
        std::snprintf(suffix, sizeof suffix, "_iter%03zu.svg", r.step);
        emit_histogram(r, doc.n_qubits, base.parent_path() / (stem + suffix), OutputFormat::Svg);
      }
      break;
    }
  }
  return 0;
}

int run_synth(const RunConfig& config, std::ostream& out) {
  const double dt = config.dts.front();
  const Circuit c = build_named_circuit(config, dt);
  const auto u = circuit_unitary(c);
  const double err = (data_block(u, 4) - reference_operator(config, dt)).cwiseAbs().maxCoeff();
  double leak = 0.0;
  const auto block = data_block(u, 4);
  for (Eigen::Index col = 0; col < 16; ++col) leak = std::max(leak, 1.0 - block.col(col).squaredNorm());

  Json j;
  j["circuit"] = circuit_kind_name(config.circuit);
  j["dt"] = dt;
  j["potential_mode"] = potential_mode_name(config.potential_mode);
  j["kinetic_mode"] = kinetic_mode_name(config.kinetic_mode);
  j["n_qubits"] = c.n_qubits();
  j["data_qubits"] = 4;
  j["ancillas"] = c.n_qubits() - 4;
  j["gate_count"] = c.size();
  Json kinds = Json::object();
  const auto counts = c.count_by_kind();
  for (std::size_t k = 0; k < counts.size(); ++k) {
    if (counts[k] > 0) kinds[std::string(gate_name(static_cast<GateKind>(k)))] = counts[k];
  }
  j["gates_by_kind"] = kinds;
  j["global_phase"] = c.global_phase();
  j["max_abs_error_vs_dense"] = err;
  j["ancilla_leakage"] = std::max(0.0, leak);
  emit(config, j.dump(2) + "\n", out);
  return 0;
}

int run_export(const RunConfig& config, std::ostream& out) {
  const Circuit c = build_named_circuit(config, config.dts.front());
  const QasmOptions opts{.measured_qubits = config.measure ? std::size_t{4} : std::size_t{0}};
  emit(config, to_qasm(c, opts), out);
  return 0;
}

int run_compare(const RunConfig& config, std::ostream& out) {
  const std::string& initial = config.initials.front();
  Json report;
  report["initial"] = initial;
  report["t_final"] = config.t_final;
  report["potential_mode"] = potential_mode_name(config.potential_mode);
  report["kinetic_mode"] = kinetic_mode_name(config.kinetic_mode);
  Json runs = Json::array();
  std::vector<double> finals;
  for (double dt : config.dts) {
    const TrotterPlan plan = config.plan_for(dt);
    const auto psi0 = prepare_basis_state(4, initial);
    const auto circ = evolve(psi0, plan, Backend::Circuit);
    const auto exact = evolve(psi0, plan, Backend::Exact);
    double max_tvd = 0.0;
    for (std::size_t i = 0; i < circ.iterations.size(); ++i) {
      max_tvd = std::max(max_tvd, total_variation_distance(circ.iterations[i].probabilities,
                                                           exact.iterations[i].probabilities));
    }
    const double final_tvd = total_variation_distance(circ.iterations.back().probabilities,
                                                      exact.iterations.back().probabilities);
    finals.push_back(final_tvd);
    Json r;
    r["dt"] = dt;
    r["steps"] = plan.steps;
    r["time"] = static_cast<double>(plan.steps) * dt;
    r["tvd_final"] = final_tvd;
    r["tvd_max"] = max_tvd;
    r["step_error"] = trotter_error(plan);
    runs.push_back(std::move(r));
  }
  report["runs"] = std::move(runs);
  // Sorted by decreasing dt, the final TVD must strictly decrease.
  std::vector<std::size_t> order(config.dts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](auto a, auto b) { return config.dts[a] > config.dts[b]; });
  bool converging = true;
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (!(finals[order[i]] < finals[order[i - 1]])) converging = false;
  }
  report["tvd_decreases_with_dt"] = converging;
  emit(config, report.dump(2) + "\n", out);
  return 0;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
  std::filesystem::path dir;
  if (!to_stdout(config.output)) {
    dir = resolve_output(config.output);
  } else if (const char* env = std::getenv(kOutputDirEnv); env != nullptr && *env != '\0') {
    dir = env;
  } else {
    dir = ".";
  }

  struct Job {
    std::string initial;
    double dt;
    std::filesystem::path path;
  };
  std::vector<Job> jobs;
  for (const auto& initial : config.initials) {
    for (double dt : config.dts) {
      jobs.push_back({initial, dt, dir / ("sweep_" + initial + "_dt" + short_double(dt) + ".json")});
    }
  }

  std::vector<std::future<std::size_t>> futures;
  futures.reserve(jobs.size());
  for (const auto& job : jobs) {
    futures.push_back(std::async(std::launch::async, [&config, job] {
      const ResultDocument doc = simulate_document(config, job.initial, job.dt, false);
      write_text_file(job.path, to_json(doc));
      return doc.config.steps;
    }));
  }

  Json index;
  Json runs = Json::array();
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Json r;
    r["initial"] = jobs[i].initial;
    r["dt"] = jobs[i].dt;
    r["steps"] = futures[i].get();
    r["path"] = jobs[i].path.string();
    runs.push_back(std::move(r));
  }
  index["runs"] = std::move(runs);
  out << index.dump(2) << "\n";
  return 0;
}

}  // namespace

std::string potential_mode_name(PotentialMode mode) {
  return mode == PotentialMode::Tabulated ? "tabulated" : "formula";
}

std::string kinetic_mode_name(KineticMode mode) {
  return mode == KineticMode::ZeroNyquist ? "zero-nyquist" : "full-nyquist";
}

std::string backend_name(Backend backend) {
  return backend == Backend::Circuit ? "circuit" : "exact";
}

void RunConfig::validate() const {
  if (initials.empty()) throw UsageError("at least one --initial state is required");
  for (const auto& s : initials) {
    if (s.size() != 4 || s.find_first_not_of("01") != std::string::npos) {
      throw UsageError("--initial must be a 4-bit string such as 0001, got '" + s + "'");
    }
  }
  if (dts.empty()) throw UsageError("at least one --dt is required");
  for (double dt : dts) {
    if (!(dt > 0.0) || !std::isfinite(dt)) throw UsageError("--dt must be positive");
  }
  if (!(t_final > 0.0) || !std::isfinite(t_final)) throw UsageError("--t-final must be positive");
  if (shots == 0) throw UsageError("--shots must be at least 1");
  if (snapshot_every == 0) throw UsageError("--snapshot-every must be at least 1");

  const bool single_run = subcommand == Subcommand::Simulate || subcommand == Subcommand::Sample ||
                          subcommand == Subcommand::Synth || subcommand == Subcommand::ExportQasm;
  if (single_run && dts.size() != 1) {
    throw UsageError(subcommand_name(subcommand) + " takes a single --dt");
  }
  if (single_run && initials.size() != 1) {
    throw UsageError(subcommand_name(subcommand) + " takes a single --initial");
  }
  if (subcommand == Subcommand::Compare && initials.size() != 1) {
    throw UsageError("compare takes a single --initial");
  }
  if (format == OutputFormat::Svg && to_stdout(output)) {
    throw UsageError("--format svg writes one file per snapshot and needs --output");
  }
  if (format != OutputFormat::Json &&
      (subcommand == Subcommand::Synth || subcommand == Subcommand::Compare ||
       subcommand == Subcommand::Sweep)) {
    throw UsageError(subcommand_name(subcommand) + " only writes JSON");
  }
}

std::size_t RunConfig::resolved_steps(double dt) const {
  return steps ? *steps : steps_for_final_time(t_final, dt);
}

TrotterPlan RunConfig::plan_for(double dt) const {
  TrotterPlan plan;
  plan.dt = dt;
  plan.steps = resolved_steps(dt);
  plan.potential_mode = potential_mode;
  plan.kinetic_mode = kinetic_mode;
  plan.snapshot_every = snapshot_every;
  plan.use_symmetry_folding = use_symmetry_folding;
  plan.cancel_redundant = cancel_redundant;
  return plan;
}

ResultDocument simulate_document(const RunConfig& config, const std::string& initial, double dt,
                                 bool with_counts) {
  const TrotterPlan plan = config.plan_for(dt);
  const auto series = evolve(prepare_basis_state(4, initial), plan, config.backend);

  ResultDocument doc;
  doc.config = echo(config, initial, dt, plan.steps);
  doc.n_qubits = 4;
  doc.tool_version = std::string(tool_version());
  for (const auto& snap : series.iterations) {
    RunRecord r{snap.step, snap.probabilities, std::nullopt};
    if (with_counts) {
      r.counts = sample_distribution(snap.probabilities, config.shots, config.seed + snap.step).counts;
    }
    doc.records.push_back(std::move(r));
  }
  return doc;
}

RunConfig parse_command_line(int argc, const char* const* argv) {
  RunConfig cfg;
  std::string steps_text = "auto";

  CLI::App app{"ljsim: split-operator simulation of two Lennard-Jones particles on a 4-site lattice"};
  app.require_subcommand(1);

  const std::map<std::string, PotentialMode> potential_map{
      {"tabulated", PotentialMode::Tabulated}, {"formula", PotentialMode::Formula}};
  const std::map<std::string, KineticMode> kinetic_map{
      {"zero-nyquist", KineticMode::ZeroNyquist}, {"full-nyquist", KineticMode::FullNyquist}};
  const std::map<std::string, Backend> backend_map{{"circuit", Backend::Circuit},
                                                    {"exact", Backend::Exact}};
  const std::map<std::string, OutputFormat> format_map{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"svg", OutputFormat::Svg}};
  const std::map<std::string, CircuitKind> circuit_map{{"step", CircuitKind::Step},
                                                        {"potential", CircuitKind::Potential},
                                                        {"kinetic", CircuitKind::Kinetic},
                                                        {"qft", CircuitKind::Qft},
                                                        {"iqft", CircuitKind::InverseQft}};

  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--dt", cfg.dts, "Time step(s)")->check(CLI::PositiveNumber);
    sub->add_option("--potential-mode", cfg.potential_mode, "tabulated | formula")
        ->transform(CLI::CheckedTransformer(potential_map, CLI::ignore_case));
    sub->add_option("--kinetic-mode", cfg.kinetic_mode, "zero-nyquist | full-nyquist")
        ->transform(CLI::CheckedTransformer(kinetic_map, CLI::ignore_case));
    sub->add_flag("!--no-fold", cfg.use_symmetry_folding, "Disable symmetry folding");
    sub->add_flag("!--no-cancel", cfg.cancel_redundant, "Disable redundant-gate cancellation");
    sub->add_option("-o,--output", cfg.output, "Output path ('-' for stdout)");
  };
  auto add_evolution = [&](CLI::App* sub) {
    add_model(sub);
    sub->add_option("--initial", cfg.initials, "Initial basis state(s), e.g. 0001");
    sub->add_option("--steps", steps_text, "Step count or 'auto'");
    sub->add_option("--t-final", cfg.t_final, "Final time used by --steps auto");
    sub->add_option("--snapshot-every", cfg.snapshot_every, "Snapshot interval in steps");
  };
  auto add_run = [&](CLI::App* sub) {
    add_evolution(sub);
    sub->add_option("--backend", cfg.backend, "circuit | exact")
        ->transform(CLI::CheckedTransformer(backend_map, CLI::ignore_case));
    sub->add_option("--format", cfg.format, "json | csv | svg")
        ->transform(CLI::CheckedTransformer(format_map, CLI::ignore_case));
    sub->add_flag("--timing", cfg.timing, "Record wall time in the output");
  };
  auto add_circuit_choice = [&](CLI::App* sub) {
    add_model(sub);
    sub->add_option("--circuit", cfg.circuit, "step | potential | kinetic | qft | iqft")
        ->transform(CLI::CheckedTransformer(circuit_map, CLI::ignore_case));
  };

  auto* simulate = app.add_subcommand("simulate", "Evolve a basis state and record probabilities");
  add_run(simulate);
  auto* sample_cmd = app.add_subcommand("sample", "Like simulate, plus shot histograms per snapshot");
  add_run(sample_cmd);
  sample_cmd->add_option("--shots", cfg.shots, "Shots per snapshot");
  sample_cmd->add_option("--seed", cfg.seed, "Sampling seed");
  auto* synth = app.add_subcommand("synth", "Synthesize a circuit and verify it against dense algebra");
  add_circuit_choice(synth);
  auto* export_cmd = app.add_subcommand("export-qasm", "Write a circuit as OpenQASM 2.0");
  add_circuit_choice(export_cmd);
  export_cmd->add_flag("--measure", cfg.measure, "Append measurement of the data qubits");
  auto* compare = app.add_subcommand("compare", "Circuit vs exact evolution for several time steps");
  add_evolution(compare);
  auto* sweep = app.add_subcommand("sweep", "Run every (initial, dt) pair in parallel, one file each");
  add_evolution(sweep);
  sweep->add_option("--backend", cfg.backend, "circuit | exact")
      ->transform(CLI::CheckedTransformer(backend_map, CLI::ignore_case));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForAllHelp&) {
    throw HelpRequested(app.help("", CLI::AppFormatMode::All));
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  for (auto* sub : app.get_subcommands()) {
    if (sub == simulate) cfg.subcommand = Subcommand::Simulate;
    if (sub == sample_cmd) cfg.subcommand = Subcommand::Sample;
    if (sub == synth) cfg.subcommand = Subcommand::Synth;
    if (sub == export_cmd) cfg.subcommand = Subcommand::ExportQasm;
    if (sub == compare) cfg.subcommand = Subcommand::Compare;
    if (sub == sweep) cfg.subcommand = Subcommand::Sweep;
  }

  if (steps_text == "auto") {
    cfg.steps.reset();
  } else {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(steps_text, &pos);
    } catch (const std::exception&) {
      pos = 0;
    }
    if (pos != steps_text.size() || steps_text.empty() || steps_text.front() == '-') {
      throw UsageError("--steps must be a non-negative integer or 'auto', got '" + steps_text + "'");
    }
    cfg.steps = static_cast<std::size_t>(v);
  }

  cfg.validate();
  return cfg;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    switch (config.subcommand) {
      case Subcommand::Simulate: return run_simulate(config, out, false);
      case Subcommand::Sample: return run_simulate(config, out, true);
      case Subcommand::Synth: return run_synth(config, out);
      case Subcommand::ExportQasm: return run_export(config, out);
      case Subcommand::Compare: return run_compare(config, out);
      case Subcommand::Sweep: return run_sweep(config, out);
    }
  } catch (const ljsim::Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_command_line(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return 0;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\nRun with --help for usage.\n";
    return 2;
  }
  return run(config, out, err);
}

}  // namespace ljsim::cli
