// Copyright 2026 The leakctl Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "leakctl/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "leakctl/cli/output.hpp"
#include "leakctl/framework.hpp"

#ifndef LEAKCTL_VERSION
#define LEAKCTL_VERSION "0.0.0"
#endif

namespace leakctl::cli {

using nlohmann::json;

namespace {

json offsets_json(const OffsetSet& o) {
  return json{{"amp", o.amp},
              {"det", o.det},
              {"phase", o.phase},
              {"det_mhz", o.det / kMHz},
              {"phase_pi", o.phase / kPi}};
}

json summary_base(const ExperimentConfig& c, const std::string& command) {
  json j;
  j["tool"] = "leakctl";
  j["version"] = LEAKCTL_VERSION;
  j["command"] = command;
  j["config"] = config_to_json(c);
  return j;
}

std::string finish(const ExperimentConfig& c, const std::string& stem, json summary,
                   CommandResult& r) {
  const std::string path = output_path(c.output, stem + "_summary.json");
  write_json(path, summary);
  r.summary = std::move(summary);
  r.files.push_back(path);
  return path;
}

std::string write_csv(const ExperimentConfig& c, const std::string& name, const CsvTable& t,
                      CommandResult& r) {
  const std::string path = output_path(c.output, name);
  t.write(path);
  r.files.push_back(path);
  return path;
}

// Trace-optimal offsets used as the SSO correction, or the configured ones.
OffsetSet resolve_offsets(const ExperimentConfig& c, const Scenario& s, int threads,
                          int* evaluations) {
  if (!c.optimize) return c.offsets;
  const auto r = optimize_offsets(make_objective(s, s.leak_only_measure), c.bounds, c.seed_grid,
                                  threads);
  if (evaluations) *evaluations = r.evaluations;
  return r.offsets;
}

std::string initial_label(const Scenario& s) {
  if (s.is_transfer()) return s.transfer_from;
  if (s.is_two_qubit()) return "01";
  return s.labels.front();
}

double unitarity_defect(const Operator& u) {
  const Matrix m = u.entries();
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm();
}

SingleQubitModel single_qubit_model(const ExperimentConfig& c) {
  if (c.gate == "not") return not_model(c.params);
  if (c.gate == "hadamard") return hadamard_model(c.params);
  if (c.gate == "gtc") return gtc_model(c.gtc, c.params);
  throw ConfigError("gate '" + c.gate + "' is not a single-qubit gate");
}

}  // namespace

ScenarioKind gate_kind(const std::string& gate) {
  if (gate == "not") return ScenarioKind::Not;
  if (gate == "hadamard") return ScenarioKind::Hadamard;
  if (gate == "iswap") return ScenarioKind::Iswap;
  if (gate == "stirap") return ScenarioKind::Stirap;
  if (gate == "gtc") return ScenarioKind::Gtc;
  throw ConfigError("unknown gate '" + gate + "'");
}

double default_sweep_half_range(Axis a) {
  switch (a) {
    case Axis::Amp:
      return 0.1;
    case Axis::Det:
      return kTwoPi * 5e6;
    case Axis::Phase:
      return 0.15 * kPi;
  }
  return 0.0;
}

CommandResult cmd_run(const ExperimentConfig& c) {
  if (c.scenario == "drag") return cmd_drag(c);
  if (c.scenario == "robustness") return cmd_robustness(c);
  if (c.scenario == "framework") return cmd_framework(c);
  ExperimentConfig g = c;
  g.gate = c.scenario;
  return cmd_gate(g);
}

CommandResult cmd_gate(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const Scenario s = make_scenario(gate_kind(c.gate), scenario_options(c));
  int evaluations = 0;
  const OffsetSet off = resolve_offsets(c, s, threads, &evaluations);

  std::vector<Measure> measures{s.leak_only_measure};
  if (!s.is_transfer() && s.leak_only_measure != Measure::AveragedClosed) {
    measures.push_back(Measure::AveragedClosed);
  }
  if (c.decoherence) measures.push_back(s.decoherent_measure);
  const Measure headline = c.decoherence ? s.decoherent_measure : s.leak_only_measure;

  json summary = summary_base(c, "run");
  summary["scenario"] = c.gate;
  json fid;
  for (const auto& [run, o] : {std::pair<std::string, OffsetSet>{"uncorrected", OffsetSet{}},
                               std::pair<std::string, OffsetSet>{"sso", off}}) {
    for (Measure m : measures) fid[run][to_string(m)] = evaluate(s, o, m);
    fid[run]["leakage_closed"] = final_leakage(s, o, false);
    if (c.decoherence) fid[run]["leakage_open"] = final_leakage(s, o, true);
  }
  summary["fidelities"] = fid;
  summary["headline_measure"] = to_string(headline);
  summary["F_uncorrected"] = fid["uncorrected"][to_string(headline)];
  summary["F_sso"] = fid["sso"][to_string(headline)];
  summary["offsets"] = offsets_json(off);
  summary["offsets_source"] = c.optimize ? "optimize" : "config";

  const Hamiltonian h0 = s.bind({}, true);
  json diag;
  diag["duration_ns"] = s.duration * 1e9;
  diag["n_steps"] = resolve_steps(s.integrator, h0, s.duration);
  diag["unitarity_defect"] = unitarity_defect(scenario_unitary(s, {}, true));
  diag["optimizer_evaluations"] = evaluations;
  diag["threads"] = threads;
  summary["diagnostics"] = diag;

  std::vector<std::string> header{"run", "t_ns"};
  for (const auto& l : s.labels) header.push_back("P_" + l);
  CsvTable pops(header);
  const std::string init = initial_label(s);
  std::vector<std::tuple<std::string, OffsetSet, bool>> runs{{"uncorrected", {}, false},
                                                             {"sso", off, false}};
  if (c.decoherence) {
    runs.emplace_back("uncorrected_open", OffsetSet{}, true);
    runs.emplace_back("sso_open", off, true);
  }
  for (const auto& [name, o, open] : runs) {
    for (const auto& p : population_trajectory(s, o, open, init, c.samples)) {
      std::vector<Cell> row{name, p.t * 1e9};
      for (double v : p.populations) row.emplace_back(v);
      pops.add_row(std::move(row));
    }
  }
  summary["initial_state"] = init;
  write_csv(c, c.gate + "_populations.csv", pops, r);
  finish(c, c.gate, std::move(summary), r);
  return r;
}

CommandResult cmd_sweep(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const Scenario s = make_scenario(gate_kind(c.gate), scenario_options(c));
  const Measure m = parse_measure(c.sweep.measure);
  SweepSpec spec;
  spec.axis = parse_axis(c.sweep.param);
  const double h1 = default_sweep_half_range(spec.axis);
  spec.lo = c.sweep.lo.value_or(-h1);
  spec.hi = c.sweep.hi.value_or(h1);
  spec.n_points = c.sweep.n;
  std::string stem = c.gate + "_sweep_" + c.sweep.param;
  if (c.sweep.param2) {
    spec.axis2 = parse_axis(*c.sweep.param2);
    const double h2 = default_sweep_half_range(*spec.axis2);
    spec.lo2 = c.sweep.lo2.value_or(-h2);
    spec.hi2 = c.sweep.hi2.value_or(h2);
    spec.n_points2 = c.sweep.n2;
    stem += "_" + *c.sweep.param2;
  }
  if (!c.optimize) spec.fixed_offsets = c.offsets;
  spec.validate();
  const SweepTable table = sweep(make_objective(s, m), spec, threads);

  CsvTable csv({"i", "j", "amp", "det", "phase", "x", "y", "fidelity", "ok"});
  int failures = 0;
  json errors = json::array();
  for (const auto& row : table.rows) {
    csv.add_row({row.i, row.j, row.offsets.amp, row.offsets.det, row.offsets.phase, row.x, row.y,
                 row.fidelity, row.ok ? 1 : 0});
    if (!row.ok) {
      ++failures;
      errors.push_back({{"i", row.i}, {"j", row.j}, {"error", row.error}});
    }
  }
  write_csv(c, stem + ".csv", csv, r);

  json summary = summary_base(c, "sweep");
  summary["scenario"] = c.gate;
  summary["measure"] = to_string(m);
  summary["rows"] = table.rows.size();
  summary["failures"] = failures;
  summary["errors"] = errors;
  if (!spec.axis2 && failures == 0) {
    const QuadFit fit = fit_quadratic(table);
    CsvTable fcsv({"param", "x_unit", "a", "b", "c", "rms", "n"});
    const char* unit = spec.axis == Axis::Amp ? "fraction" : spec.axis == Axis::Det ? "MHz" : "pi";
    fcsv.add_row({c.sweep.param, std::string(unit), fit.a, fit.b, fit.c, fit.rms, fit.n});
    write_csv(c, stem + "_fit.csv", fcsv, r);
    summary["fit"] = {{"a", fit.a}, {"b", fit.b}, {"c", fit.c}, {"rms", fit.rms}, {"n", fit.n},
                      {"x_unit", unit}};
  }
  finish(c, stem, std::move(summary), r);
  return r;
}

CommandResult cmd_optimize(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const Scenario s = make_scenario(gate_kind(c.gate), scenario_options(c));
  const Measure m = s.leak_only_measure;
  const OptimizeResult opt =
      optimize_offsets(make_objective(s, m), c.bounds, c.seed_grid, threads);
  CsvTable csv({"measure", "amp", "det", "phase", "det_mhz", "phase_pi", "fidelity", "baseline",
                "evaluations"});
  csv.add_row({std::string(to_string(m)), opt.offsets.amp, opt.offsets.det, opt.offsets.phase,
               opt.offsets.det / kMHz, opt.offsets.phase / kPi, opt.fidelity, opt.baseline,
               opt.evaluations});
  const std::string stem = c.gate + "_optimize";
  write_csv(c, stem + ".csv", csv, r);
  json summary = summary_base(c, "optimize");
  summary["scenario"] = c.gate;
  summary["measure"] = to_string(m);
  summary["offsets"] = offsets_json(opt.offsets);
  summary["F_uncorrected"] = opt.baseline;
  summary["F_sso"] = opt.fidelity;
  summary["diagnostics"] = {{"optimizer_evaluations", opt.evaluations}, {"threads", threads}};
  finish(c, stem, std::move(summary), r);
  return r;
}

CommandResult cmd_robustness(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const ScenarioKind kind = gate_kind(c.gate);
  if (kind == ScenarioKind::Stirap) throw ConfigError("robustness runs support gate scenarios");
  const Scenario s = make_scenario(kind, scenario_options(c));
  int evaluations = 0;
  const OffsetSet off = resolve_offsets(c, s, threads, &evaluations);
  const CalibrationRanges ranges = c.robustness.value_or(
      s.is_two_qubit() ? two_qubit_calibration() : single_qubit_calibration());
  const Measure m = c.decoherence ? s.decoherent_measure : s.leak_only_measure;
  const Objective f = make_objective(s, m);
  const RobustnessTable table = robustness_grid(f, off, ranges, threads);

  CsvTable csv({"panel", "amp_err", "det_err", "phase_err", "det_err_mhz", "phase_err_pi",
                "fidelity"});
  for (const auto& row : table.rows) {
    csv.add_row({row.panel, row.error.amp, row.error.det, row.error.phase, row.error.det / kMHz,
                 row.error.phase / kPi, row.fidelity});
  }
  write_csv(c, c.gate + "_robustness.csv", csv, r);

  // Coupling precision 2pi x 0.1 MHz (0.01 MHz fine) as a fraction of the
  // drive or coupling strength.
  const double scale = s.is_two_qubit() ? c.params.g12 : c.params.omega_m;
  struct Precision {
    std::string name;
    double amp, det, phase;
  };
  const std::vector<Precision> precisions{
      {"coarse", kTwoPi * 0.1e6 / scale, kTwoPi * 0.1e6, 0.01 * kPi},
      {"fine", kTwoPi * 0.01e6 / scale, kTwoPi * 0.01e6, 0.001 * kPi}};
  CsvTable qcsv({"precision", "amp_res", "det_res", "phase_res", "amp", "det", "phase", "fidelity"});
  json quantized;
  for (const auto& p : precisions) {
    const OffsetSet q = quantize_offsets(off, p.amp, p.det, p.phase);
    const double fq = f(q);
    qcsv.add_row({p.name, p.amp, p.det, p.phase, q.amp, q.det, q.phase, fq});
    quantized[p.name] = {{"offsets", offsets_json(q)}, {"fidelity", fq}};
  }
  write_csv(c, c.gate + "_quantized.csv", qcsv, r);

  json summary = summary_base(c, "robustness");
  summary["scenario"] = c.gate;
  summary["measure"] = to_string(m);
  summary["offsets"] = offsets_json(off);
  summary["min_fidelity"] = table.min_fidelity();
  summary["center_fidelity"] = table.center_fidelity();
  summary["quantized"] = quantized;
  summary["diagnostics"] = {{"optimizer_evaluations", evaluations},
                            {"grid_points", table.rows.size()},
                            {"threads", threads}};
  finish(c, c.gate + "_robustness", std::move(summary), r);
  return r;
}

CommandResult cmd_gtc(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const ScenarioOptions opts = scenario_options(c);
  const Scenario gtc = make_scenario(ScenarioKind::Gtc, opts);
  const Scenario rabi = make_scenario(ScenarioKind::Hadamard, opts);
  int evaluations = 0;
  const OffsetSet off_gtc = resolve_offsets(c, gtc, threads, &evaluations);
  const OffsetSet off_rabi =
      optimize_offsets(make_objective(rabi, rabi.leak_only_measure), c.bounds, c.seed_grid, threads)
          .offsets;
  const auto zetas = linspace(0.0, c.zeta_max, c.zeta_points);
  const auto rows = gtc_crosstalk_study(zetas, opts, off_gtc, off_rabi, threads);

  CsvTable csv({"zeta", "zeta_mhz", "gtc_fidelity", "rabi_fidelity", "gtc_infidelity",
                "rabi_infidelity"});
  bool ordering = true;
  for (const auto& row : rows) {
    csv.add_row({row.zeta, row.zeta / kMHz, row.gtc, row.rabi, 1.0 - row.gtc, 1.0 - row.rabi});
    if (row.zeta > 0.0 && 1.0 - row.gtc > 1.0 - row.rabi) ordering = false;
  }
  write_csv(c, "gtc_crosstalk.csv", csv, r);

  const double leak_free =
      trace_gate_fidelity(scenario_unitary(gtc, {}, false), gtc.target, gtc.comp_variants.front(),
                          TraceMode::Modulus);
  json summary = summary_base(c, "gtc");
  summary["offsets_gtc"] = offsets_json(off_gtc);
  summary["offsets_rabi"] = offsets_json(off_rabi);
  summary["leak_free_fidelity"] = leak_free;
  summary["F_gtc_zeta0"] = rows.front().gtc;
  summary["F_rabi_zeta0"] = rows.front().rabi;
  summary["gtc_not_worse_at_all_zeta"] = ordering;
  summary["geometric_phase"] = gtc_geometric_phase(c.gtc.chi1, c.gtc.chi3, c.gtc.xi0, c.gtc.xi2());
  summary["diagnostics"] = {{"optimizer_evaluations", evaluations}, {"threads", threads}};
  finish(c, "gtc_crosstalk", std::move(summary), r);
  return r;
}

CommandResult cmd_drag(const ExperimentConfig& c) {
  CommandResult r;
  if (c.gate != "not" && c.gate != "hadamard") {
    throw ConfigError("drag runs support gate 'not' or 'hadamard'");
  }
  const int threads = c.resolved_threads();
  const DragComparison d = drag_compare(gate_kind(c.gate), scenario_options(c), c.seed_grid, threads);
  CsvTable csv({"method", "fidelity", "amp", "det", "phase"});
  csv.add_row({std::string("uncorrected"), d.uncorrected, 0.0, 0.0, 0.0});
  csv.add_row({std::string("drag"), d.drag, 0.0, 0.0, 0.0});
  csv.add_row({std::string("sso"), d.sso, d.sso_offsets.amp, d.sso_offsets.det, d.sso_offsets.phase});
  write_csv(c, c.gate + "_drag.csv", csv, r);
  json summary = summary_base(c, "drag");
  summary["scenario"] = c.gate;
  summary["measure"] = to_string(Measure::AveragedOpen);
  summary["F_uncorrected"] = d.uncorrected;
  summary["F_drag"] = d.drag;
  summary["F_sso"] = d.sso;
  summary["offsets"] = offsets_json(d.sso_offsets);
  finish(c, c.gate + "_drag", std::move(summary), r);
  return r;
}

CommandResult cmd_framework(const ExperimentConfig& c) {
  CommandResult r;
  const int threads = c.resolved_threads();
  const SingleQubitModel m = single_qubit_model(c);
  const Scenario s = make_scenario(gate_kind(c.gate), scenario_options(c));
  int evaluations = 0;
  const OffsetSet off = resolve_offsets(c, s, threads, &evaluations);
  const Operator a = Operator::identity(m.levels);
  const std::vector<std::string> comp{"0", "1"};

  CsvTable csv({"run", "n_seg", "segment", "residual"});
  json summary = summary_base(c, "framework");
  summary["scenario"] = c.gate;
  summary["offsets"] = offsets_json(off);
  for (const auto& [name, o] : {std::pair<std::string, OffsetSet>{"uncorrected", OffsetSet{}},
                                std::pair<std::string, OffsetSet>{"sso", off}}) {
    const Operator u_err = error_propagator(m, o, c.integrator);
    json entry;
    entry["error_identity_defect"] = error_identity_defect(u_err, comp);
    json maxima = json::object();
    for (int n : c.magnus_segments) {
      const MagnusReport rep = magnus_residual(m, a, n, o);
      for (int k = 0; k < n; ++k) csv.add_row({name, n, k, rep.residuals[k]});
      maxima[std::to_string(n)] = rep.max_residual;
    }
    entry["max_residual"] = maxima;
    summary[name] = entry;
  }
  write_csv(c, c.gate + "_framework.csv", csv, r);
  summary["diagnostics"] = {{"optimizer_evaluations", evaluations}, {"threads", threads}};
  finish(c, c.gate + "_framework", std::move(summary), r);
  return r;
}

namespace {

struct CommonFlags {
  std::string config;
  std::optional<std::string> out;
  std::optional<int> threads;
  std::optional<int> seed_grid;
  std::optional<int> steps;
  std::optional<std::string> gate;
};

void add_common(CLI::App* sub, CommonFlags& f, bool with_gate) {
  sub->add_option("--config", f.config, "JSON config file");
  sub->add_option("--out", f.out, "Output directory");
  sub->add_option("--threads", f.threads, "Worker threads (capped by LEAKCTL_THREADS)");
  sub->add_option("--seed-grid", f.seed_grid, "Optimizer seed grid points per axis");
  sub->add_option("--steps", f.steps, "Integrator steps (0 selects automatically)");
  if (with_gate) sub->add_option("--gate,--scenario", f.gate, "not, hadamard, iswap, stirap or gtc");
}

ExperimentConfig build_config(const CommonFlags& f) {
  ExperimentConfig c = f.config.empty() ? ExperimentConfig{} : load_config(f.config);
  if (f.out) c.output = *f.out;
  if (f.threads) c.threads = *f.threads;
  if (f.seed_grid) c.seed_grid = *f.seed_grid;
  if (f.steps) c.integrator.n_steps = *f.steps;
  if (f.gate) c.gate = *f.gate;
  return c;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"leakctl: leakage suppression experiments for superconducting qubit gates"};
  app.set_version_flag("--version", std::string(LEAKCTL_VERSION));
  app.require_subcommand(1);

  CommonFlags f;
  std::string run_path;
  auto* run = app.add_subcommand("run", "Run the pipeline selected by a config file");
  run->add_option("config_path", run_path, "JSON config file");
  add_common(run, f, false);

  struct SweepFlags {
    std::optional<std::string> param, lo, hi, param2, lo2, hi2, measure;
    std::optional<int> n, n2;
  } sf;
  auto* sw = app.add_subcommand("sweep", "Fidelity versus one or two offsets");
  add_common(sw, f, true);
  sw->add_option("--param", sf.param, "amp, det or phase");
  sw->add_option("--lo", sf.lo, "Lower bound, e.g. -0.15pi or -2pi*5MHz");
  sw->add_option("--hi", sf.hi, "Upper bound");
  sw->add_option("--n", sf.n, "Number of points");
  sw->add_option("--param2", sf.param2, "Second axis");
  sw->add_option("--lo2", sf.lo2, "Second axis lower bound");
  sw->add_option("--hi2", sf.hi2, "Second axis upper bound");
  sw->add_option("--n2", sf.n2, "Second axis points");
  sw->add_option("--measure", sf.measure,
                 "trace, averaged_closed, averaged_open, state_closed or state_open");

  auto* opt = app.add_subcommand("optimize", "Optimize static offsets");
  add_common(opt, f, true);
  auto* rob = app.add_subcommand("robustness", "Calibration-error grids and quantized offsets");
  add_common(rob, f, true);
  auto* gtc = app.add_subcommand("gtc", "Geometric trajectory crosstalk study");
  add_common(gtc, f, false);
  auto* drag = app.add_subcommand("drag", "DRAG versus static offsets");
  add_common(drag, f, true);
  auto* fw = app.add_subcommand("framework", "Error propagator and Magnus residual diagnostics");
  add_common(fw, f, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (!run_path.empty()) {
      if (!f.config.empty() && f.config != run_path) {
        throw ConfigError("give the config either as a positional argument or with --config");
      }
      f.config = run_path;
    }
    ExperimentConfig c = build_config(f);
    CommandResult result;
    if (run->parsed()) {
      if (f.config.empty()) throw ConfigError("run needs a config file");
      c.validate();
      result = cmd_run(c);
    } else if (sw->parsed()) {
      if (sf.param) c.sweep.param = *sf.param;
      if (sf.lo) c.sweep.lo = parse_quantity(*sf.lo);
      if (sf.hi) c.sweep.hi = parse_quantity(*sf.hi);
      if (sf.n) c.sweep.n = *sf.n;
      if (sf.param2) c.sweep.param2 = *sf.param2;
      if (sf.lo2) c.sweep.lo2 = parse_quantity(*sf.lo2);
      if (sf.hi2) c.sweep.hi2 = parse_quantity(*sf.hi2);
      if (sf.n2) c.sweep.n2 = *sf.n2;
      if (sf.measure) c.sweep.measure = *sf.measure;
      c.validate();
      result = cmd_sweep(c);
    } else if (opt->parsed()) {
      c.validate();
      result = cmd_optimize(c);
    } else if (rob->parsed()) {
      c.validate();
      result = cmd_robustness(c);
    } else if (gtc->parsed()) {
      c.gate = "gtc";
      c.validate();
      result = cmd_gtc(c);
    } else if (drag->parsed()) {
      c.validate();
      result = cmd_drag(c);
    } else if (fw->parsed()) {
      c.validate();
      result = cmd_framework(c);
    }
    for (const auto& p : result.files) out << p << '\n';
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const LabelError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const json::exception& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const IntegrationError& e) {
    err << "integration error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
}

}  // namespace leakctl::cli
