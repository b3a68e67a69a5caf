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

#include "leakctl/cli/config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <regex>
#include <set>

namespace leakctl::cli {

using nlohmann::json;

namespace {

std::string strip_spaces(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be a JSON object");
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw ConfigError("unknown key '" + k + "' in " + where);
  }
}

int get_int(const json& j, const std::string& key) {
  if (!j.is_number_integer()) throw ConfigError("'" + key + "' must be an integer");
  return j.get<int>();
}

bool get_bool(const json& j, const std::string& key) {
  if (!j.is_boolean()) throw ConfigError("'" + key + "' must be true or false");
  return j.get<bool>();
}

std::string get_string(const json& j, const std::string& key) {
  if (!j.is_string()) throw ConfigError("'" + key + "' must be a string");
  return j.get<std::string>();
}

}  // namespace

double parse_quantity(const std::string& text) {
  static const std::regex freq(
      R"(^([+-]?)(?:2\*?(?:pi|π)[*×x]?)([0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)(Hz|kHz|MHz|GHz)$)");
  static const std::regex pi_mult(R"(^([+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?)\*?(?:pi|π)$)");
  static const std::regex bare_unit(R"(^[+-]?[0-9]*\.?[0-9]+(?:[eE][+-]?[0-9]+)?(Hz|kHz|MHz|GHz)$)");
  const std::string s = strip_spaces(text);
  std::smatch m;
  if (std::regex_match(s, m, freq)) {
    const double v = std::stod(m[2].str());
    const std::string unit = m[3].str();
    const double scale = unit == "Hz" ? 1.0 : unit == "kHz" ? 1e3 : unit == "MHz" ? 1e6 : 1e9;
    return (m[1].str() == "-" ? -1.0 : 1.0) * kTwoPi * v * scale;
  }
  if (s == "pi" || s == "π" || s == "+pi") return kPi;
  if (s == "-pi" || s == "-π") return -kPi;
  if (std::regex_match(s, m, pi_mult)) return std::stod(m[1].str()) * kPi;
  if (std::regex_match(s, bare_unit)) {
    throw ConfigError("frequency '" + text + "' needs an explicit 2pi factor, e.g. 2pi*30MHz");
  }
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("cannot parse quantity '" + text + "'");
  }
  if (pos != s.size() || !std::isfinite(v)) throw ConfigError("cannot parse quantity '" + text + "'");
  return v;
}

double parse_quantity(const json& value, const std::string& key) {
  if (value.is_number()) {
    const double v = value.get<double>();
    if (!std::isfinite(v)) throw ConfigError("'" + key + "' must be finite");
    return v;
  }
  if (value.is_string()) {
    try {
      return parse_quantity(value.get<std::string>());
    } catch (const ConfigError& e) {
      throw ConfigError("'" + key + "': " + e.what());
    }
  }
  throw ConfigError("'" + key + "' must be a number or a quantity string");
}

Measure parse_measure(const std::string& name) {
  if (name == "trace") return Measure::Trace;
  if (name == "averaged_closed") return Measure::AveragedClosed;
  if (name == "averaged_open") return Measure::AveragedOpen;
  if (name == "state_closed") return Measure::StateClosed;
  if (name == "state_open") return Measure::StateOpen;
  throw ConfigError("unknown measure '" + name + "'");
}

void ExperimentConfig::validate() const {
  static const std::set<std::string> scenarios{"not", "hadamard", "iswap", "stirap",
                                               "gtc", "drag", "robustness", "framework"};
  if (!scenarios.count(scenario)) throw ConfigError("unknown scenario '" + scenario + "'");
  static const std::set<std::string> gates{"not", "hadamard", "iswap", "stirap", "gtc"};
  if (!gates.count(gate)) throw ConfigError("unknown gate '" + gate + "'");
  if (scenario == "drag" && gate != "not" && gate != "hadamard") {
    throw ConfigError("drag runs support gate 'not' or 'hadamard'");
  }
  if (scenario == "framework" && gate != "not" && gate != "hadamard" && gate != "gtc") {
    throw ConfigError("framework runs support single-qubit gates");
  }
  if (scenario == "robustness" && (gate == "stirap")) {
    throw ConfigError("robustness runs support gate scenarios");
  }
  integrator.validate();
  if (seed_grid < 1) throw ConfigError("seed_grid must be positive");
  if (!(bounds.amp > 0.0 && bounds.det > 0.0 && bounds.phase > 0.0)) {
    throw ConfigError("optimizer bounds must be positive");
  }
  if (!offsets.is_finite()) throw ConfigError("offsets must be finite");
  if (zeta_points < 2) throw ConfigError("zeta_points must be at least 2");
  if (!(zeta_max > 0.0)) throw ConfigError("zeta_max must be positive");
  if (samples < 2) throw ConfigError("samples must be at least 2");
  if (threads < 0) throw ConfigError("threads must be nonnegative");
  for (int n : magnus_segments) {
    if (n < 1 || n > 64) throw ConfigError("magnus_segments entries must be in [1, 64]");
  }
  if (!(params.omega_m > 0.0) || !(params.alpha > 0.0)) {
    throw ConfigError("omega_m and alpha must be positive");
  }
  if (params.kappa1 < 0.0 || params.kappa_phi < 0.0) throw ConfigError("rates must be nonnegative");
  parse_measure(sweep.measure);
  parse_axis(sweep.param);
  if (sweep.param2) parse_axis(*sweep.param2);
}

int ExperimentConfig::resolved_threads() const {
  // default_threads() honours LEAKCTL_THREADS; an explicit request is capped by it.
  return threads > 0 ? std::min(threads, default_threads()) : default_threads();
}

ExperimentConfig config_from_json(const json& j) {
  reject_unknown(j,
                 {"scenario", "gate", "params", "gtc", "offsets", "decoherence", "integrator",
                  "optimizer", "sweep", "robustness", "magnus_segments", "samples", "threads",
                  "output"},
                 "config");
  ExperimentConfig c;
  if (j.contains("scenario")) c.scenario = get_string(j["scenario"], "scenario");
  if (j.contains("gate")) {
    c.gate = get_string(j["gate"], "gate");
  } else if (c.scenario != "drag" && c.scenario != "robustness" && c.scenario != "framework") {
    c.gate = c.scenario;
  }

  if (j.contains("params")) {
    const json& p = j["params"];
    reject_unknown(p,
                   {"omega_m", "alpha", "kappa1", "kappa_phi", "lambda", "g12", "alpha1", "alpha2",
                    "delta1", "delta_t", "beta1", "phi1", "stirap_theta"},
                   "params");
    auto set = [&](const char* k, double& dst) {
      if (p.contains(k)) dst = parse_quantity(p[k], std::string("params.") + k);
    };
    set("omega_m", c.params.omega_m);
    set("alpha", c.params.alpha);
    set("kappa1", c.params.kappa1);
    set("kappa_phi", c.params.kappa_phi);
    set("lambda", c.params.lambda);
    set("g12", c.params.g12);
    set("alpha1", c.params.alpha1);
    set("alpha2", c.params.alpha2);
    set("delta1", c.params.delta1);
    set("delta_t", c.params.delta_t);
    set("beta1", c.params.beta1);
    set("phi1", c.params.phi1);
    set("stirap_theta", c.params.stirap_theta);
  }

  if (j.contains("gtc")) {
    const json& g = j["gtc"];
    reject_unknown(g, {"chi0", "xi0", "gamma", "chi1", "chi3", "zeta_max", "zeta_points"}, "gtc");
    auto set = [&](const char* k, double& dst) {
      if (g.contains(k)) dst = parse_quantity(g[k], std::string("gtc.") + k);
    };
    set("chi0", c.gtc.chi0);
    set("xi0", c.gtc.xi0);
    set("gamma", c.gtc.gamma);
    set("chi1", c.gtc.chi1);
    set("chi3", c.gtc.chi3);
    set("zeta_max", c.zeta_max);
    if (g.contains("zeta_points")) c.zeta_points = get_int(g["zeta_points"], "gtc.zeta_points");
  }

  if (j.contains("offsets")) {
    const json& o = j["offsets"];
    if (o.is_string()) {
      if (o.get<std::string>() != "optimize") {
        throw ConfigError("'offsets' must be \"optimize\" or an object");
      }
      c.optimize = true;
    } else {
      reject_unknown(o, {"amp", "det", "phase"}, "offsets");
      c.optimize = false;
      if (o.contains("amp")) c.offsets.amp = parse_quantity(o["amp"], "offsets.amp");
      if (o.contains("det")) c.offsets.det = parse_quantity(o["det"], "offsets.det");
      if (o.contains("phase")) c.offsets.phase = parse_quantity(o["phase"], "offsets.phase");
    }
  }

  if (j.contains("decoherence")) c.decoherence = get_bool(j["decoherence"], "decoherence");

  if (j.contains("integrator")) {
    const json& in = j["integrator"];
    reject_unknown(in, {"n_steps", "method", "dissipator"}, "integrator");
    if (in.contains("n_steps")) c.integrator.n_steps = get_int(in["n_steps"], "integrator.n_steps");
    if (in.contains("method")) {
      const auto m = get_string(in["method"], "integrator.method");
      if (m == "piecewise-exponential") {
        c.integrator.method = IntegratorMethod::PiecewiseExponential;
      } else if (m == "rk4") {
        c.integrator.method = IntegratorMethod::Rk4;
      } else {
        throw ConfigError("integrator.method must be 'piecewise-exponential' or 'rk4'");
      }
    }
    if (in.contains("dissipator")) {
      const auto d = get_string(in["dissipator"], "integrator.dissipator");
      if (d == "as-printed") {
        c.integrator.dissipator = DissipatorNorm::AsPrinted;
      } else if (d == "conventional") {
        c.integrator.dissipator = DissipatorNorm::Conventional;
      } else {
        throw ConfigError("integrator.dissipator must be 'as-printed' or 'conventional'");
      }
    }
  }

  if (j.contains("optimizer")) {
    const json& o = j["optimizer"];
    reject_unknown(o, {"seed_grid", "bounds"}, "optimizer");
    if (o.contains("seed_grid")) c.seed_grid = get_int(o["seed_grid"], "optimizer.seed_grid");
    if (o.contains("bounds")) {
      const json& b = o["bounds"];
      reject_unknown(b, {"amp", "det", "phase"}, "optimizer.bounds");
      if (b.contains("amp")) c.bounds.amp = parse_quantity(b["amp"], "optimizer.bounds.amp");
      if (b.contains("det")) c.bounds.det = parse_quantity(b["det"], "optimizer.bounds.det");
      if (b.contains("phase")) c.bounds.phase = parse_quantity(b["phase"], "optimizer.bounds.phase");
    }
  }

  if (j.contains("sweep")) {
    const json& s = j["sweep"];
    // Null marks an unset optional, as written by config_to_json.
    auto has_value = [](const json& o, const char* k) { return o.contains(k) && !o[k].is_null(); };
    reject_unknown(s, {"param", "lo", "hi", "n", "param2", "lo2", "hi2", "n2", "measure"}, "sweep");
    if (s.contains("param")) c.sweep.param = get_string(s["param"], "sweep.param");
    if (has_value(s, "lo")) c.sweep.lo = parse_quantity(s["lo"], "sweep.lo");
    if (has_value(s, "hi")) c.sweep.hi = parse_quantity(s["hi"], "sweep.hi");
    if (s.contains("n")) c.sweep.n = get_int(s["n"], "sweep.n");
    if (has_value(s, "param2")) c.sweep.param2 = get_string(s["param2"], "sweep.param2");
    if (has_value(s, "lo2")) c.sweep.lo2 = parse_quantity(s["lo2"], "sweep.lo2");
    if (has_value(s, "hi2")) c.sweep.hi2 = parse_quantity(s["hi2"], "sweep.hi2");
    if (s.contains("n2")) c.sweep.n2 = get_int(s["n2"], "sweep.n2");
    if (s.contains("measure")) c.sweep.measure = get_string(s["measure"], "sweep.measure");
  }

  if (j.contains("robustness")) {
    const json& r = j["robustness"];
    reject_unknown(r, {"amp", "det", "phase", "n"}, "robustness");
    CalibrationRanges cr = c.gate == "iswap" ? two_qubit_calibration() : single_qubit_calibration();
    if (r.contains("amp")) cr.amp = parse_quantity(r["amp"], "robustness.amp");
    if (r.contains("det")) cr.det = parse_quantity(r["det"], "robustness.det");
    if (r.contains("phase")) cr.phase = parse_quantity(r["phase"], "robustness.phase");
    if (r.contains("n")) cr.n = get_int(r["n"], "robustness.n");
    c.robustness = cr;
  }

  if (j.contains("magnus_segments")) {
    const json& m = j["magnus_segments"];
    if (!m.is_array()) throw ConfigError("'magnus_segments' must be an array of integers");
    c.magnus_segments.clear();
    for (const auto& v : m) c.magnus_segments.push_back(get_int(v, "magnus_segments"));
  }
  if (j.contains("samples")) c.samples = get_int(j["samples"], "samples");
  if (j.contains("threads")) c.threads = get_int(j["threads"], "threads");
  if (j.contains("output")) c.output = get_string(j["output"], "output");
  c.validate();
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file '" + path + "'");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("invalid JSON in '" + path + "': " + e.what());
  }
  return config_from_json(j);
}

namespace {

json offsets_json(const OffsetSet& o) {
  return json{{"amp", o.amp}, {"det", o.det}, {"phase", o.phase}};
}

json ranges_json(const CalibrationRanges& r) {
  return json{{"amp", r.amp}, {"det", r.det}, {"phase", r.phase}, {"n", r.n}};
}

}  // namespace

json config_to_json(const ExperimentConfig& c) {
  json j;
  j["scenario"] = c.scenario;
  j["gate"] = c.gate;
  const auto& p = c.params;
  j["params"] = {{"omega_m", p.omega_m},   {"alpha", p.alpha},     {"kappa1", p.kappa1},
                 {"kappa_phi", p.kappa_phi}, {"lambda", p.lambda},   {"g12", p.g12},
                 {"alpha1", p.alpha1},     {"alpha2", p.alpha2},   {"delta1", p.delta1},
                 {"delta_t", p.delta_t},   {"beta1", p.beta1},     {"phi1", p.phi1},
                 {"stirap_theta", p.stirap_theta}};
  j["gtc"] = {{"chi0", c.gtc.chi0}, {"xi0", c.gtc.xi0},           {"gamma", c.gtc.gamma},
              {"chi1", c.gtc.chi1}, {"chi3", c.gtc.chi3},         {"zeta_max", c.zeta_max},
              {"zeta_points", c.zeta_points}};
  j["offsets"] = c.optimize ? json("optimize") : offsets_json(c.offsets);
  j["decoherence"] = c.decoherence;
  j["integrator"] = {
      {"n_steps", c.integrator.n_steps},
      {"method", c.integrator.method == IntegratorMethod::Rk4 ? "rk4" : "piecewise-exponential"},
      {"dissipator",
       c.integrator.dissipator == DissipatorNorm::AsPrinted ? "as-printed" : "conventional"}};
  j["optimizer"] = {{"seed_grid", c.seed_grid}, {"bounds", offsets_json({c.bounds.amp, c.bounds.det, c.bounds.phase})}};
  json sw{{"param", c.sweep.param}, {"n", c.sweep.n}, {"measure", c.sweep.measure}, {"n2", c.sweep.n2}};
  sw["lo"] = c.sweep.lo ? json(*c.sweep.lo) : json(nullptr);
  sw["hi"] = c.sweep.hi ? json(*c.sweep.hi) : json(nullptr);
  sw["param2"] = c.sweep.param2 ? json(*c.sweep.param2) : json(nullptr);
  sw["lo2"] = c.sweep.lo2 ? json(*c.sweep.lo2) : json(nullptr);
  sw["hi2"] = c.sweep.hi2 ? json(*c.sweep.hi2) : json(nullptr);
  j["sweep"] = sw;
  const CalibrationRanges cr = c.robustness.value_or(
      c.gate == "iswap" ? two_qubit_calibration() : single_qubit_calibration());
  j["robustness"] = ranges_json(cr);
  j["magnus_segments"] = c.magnus_segments;
  j["samples"] = c.samples;
  j["threads"] = c.threads;
  j["output"] = c.output;
  return j;
}

ScenarioOptions scenario_options(const ExperimentConfig& c) {
  ScenarioOptions o;
  o.params = c.params;
  o.integrator = c.integrator;
  o.gtc = c.gtc;
  return o;
}

}  // namespace leakctl::cli
