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

// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "leakctl/framework.hpp"
#include "leakctl/metrics.hpp"
#include "leakctl/pulses.hpp"
#include "leakctl/scenarios.hpp"
#include "leakctl/tuneup.hpp"

namespace {

using namespace leakctl;

int g_threads = 1;

// Collects sub-checks of one criterion.
class Checks {
 public:
  void expect(bool ok, const std::string& what) {
    ok_ = ok_ && ok;
    if (!ok) failed_.push_back(what);
  }
  void near(double v, double ref, double tol, const std::string& what) {
    expect(std::abs(v - ref) <= tol, what + " " + fmt(v) + " vs " + fmt(ref) + " +/- " + fmt(tol));
  }
  void at_least(double v, double lo, const std::string& what) {
    expect(v >= lo, what + " " + fmt(v) + " < " + fmt(lo));
  }
  void at_most(double v, double hi, const std::string& what) {
    expect(v <= hi, what + " " + fmt(v) + " > " + fmt(hi));
  }
  void note(const std::string& s) { notes_.push_back(s); }

  bool ok() const { return ok_; }
  std::string detail() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < notes_.size(); ++i) os << (i ? "; " : "") << notes_[i];
    if (!failed_.empty()) {
      os << " | failed:";
      for (const auto& f : failed_) os << " [" << f << "]";
    }
    return os.str();
  }

  static std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
  }

 private:
  bool ok_ = true;
  std::vector<std::string> failed_;
  std::vector<std::string> notes_;
};

std::string fmt_offsets(const OffsetSet& o) {
  std::ostringstream os;
  os << "(" << Checks::fmt(o.amp) << ", 2pi*" << Checks::fmt(o.det / kMHz) << " MHz, "
     << Checks::fmt(o.phase / kPi) << "pi)";
  return os.str();
}

void offsets_near(Checks& c, const OffsetSet& got, const OffsetSet& ref, const std::string& name) {
  c.near(got.amp, ref.amp, 0.01, name + " amp");
  c.near(got.det / kMHz, ref.det / kMHz, 0.5, name + " det[MHz]");
  c.near(got.phase / kPi, ref.phase / kPi, 0.02, name + " phase[pi]");
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Optimized offsets per gate, shared between criteria.
struct GateCache {
  bool done = false;
  OptimizeResult opt;
};

GateCache g_not, g_had, g_iswap;

const OptimizeResult& optimum(GateCache& cache, ScenarioKind k) {
  if (!cache.done) {
    const Scenario s = make_scenario(k);
    cache.opt = optimize_offsets(make_objective(s, s.leak_only_measure), {}, 7, g_threads);
    cache.done = true;
  }
  return cache.opt;
}

Checks not_gate() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario s = make_scenario(ScenarioKind::Not);
  const double f0 = evaluate(s, {}, Measure::Trace);
  const auto& r = optimum(g_not, ScenarioKind::Not);
  const double dt = seconds_since(t0);
  c.note("F " + Checks::fmt(f0) + " -> " + Checks::fmt(r.fidelity) + " at " + fmt_offsets(r.offsets));
  c.note("runtime " + Checks::fmt(dt) + " s");
  c.near(f0, 0.9963, 0.002, "uncorrected");
  c.at_least(r.fidelity, 0.9995, "optimized");
  offsets_near(c, r.offsets, {0.003, -kTwoPi * 1.55e6, -0.040 * kPi}, "optimum");
  c.at_most(dt, 60.0, "runtime[s]");
  return c;
}

Checks hadamard_gate() {
  Checks c;
  const Scenario s = make_scenario(ScenarioKind::Hadamard);
  const double f0 = evaluate(s, {}, Measure::Trace);
  const auto& r = optimum(g_had, ScenarioKind::Hadamard);
  c.note("F " + Checks::fmt(f0) + " -> " + Checks::fmt(r.fidelity) + " at " + fmt_offsets(r.offsets));
  c.near(f0, 0.9948, 0.003, "uncorrected");
  c.at_least(r.fidelity, 0.999, "optimized");
  return c;
}

Checks decoherent_single() {
  Checks c;
  const Scenario n = make_scenario(ScenarioKind::Not);
  const Scenario h = make_scenario(ScenarioKind::Hadamard);
  const double n0 = evaluate(n, {}, Measure::AveragedOpen);
  const double n1 = evaluate(n, optimum(g_not, ScenarioKind::Not).offsets, Measure::AveragedOpen);
  const double h0 = evaluate(h, {}, Measure::AveragedOpen);
  const double h1 = evaluate(h, optimum(g_had, ScenarioKind::Hadamard).offsets, Measure::AveragedOpen);
  c.note("NOT " + Checks::fmt(n0) + " -> " + Checks::fmt(n1));
  c.note("Hadamard " + Checks::fmt(h0) + " -> " + Checks::fmt(h1));
  c.near(n0, 0.9961, 0.0007, "NOT uncorrected");
  c.at_least(n1, 0.9996, "NOT optimized");
  c.near(h0, 0.9946, 0.0007, "Hadamard uncorrected");
  c.at_least(h1, 0.9990, "Hadamard optimized");
  return c;
}

Checks iswap_gate() {
  Checks c;
  const auto t0 = std::chrono::steady_clock::now();
  const Scenario s = make_scenario(ScenarioKind::Iswap);
  const double f0 = evaluate(s, {}, Measure::Trace);
  const auto& r = optimum(g_iswap, ScenarioKind::Iswap);
  const double d0 = evaluate(s, {}, Measure::AveragedOpen);
  const double d1 = evaluate(s, r.offsets, Measure::AveragedOpen);
  const double dt = seconds_since(t0);
  c.note("leak-only " + Checks::fmt(f0) + " -> " + Checks::fmt(r.fidelity) + " at " +
         fmt_offsets(r.offsets));
  c.note("decoherent " + Checks::fmt(d0) + " -> " + Checks::fmt(d1));
  c.note("runtime " + Checks::fmt(dt) + " s");
  c.near(f0, 0.9980, 0.001, "leak-only uncorrected");
  c.at_least(r.fidelity, 0.9992, "leak-only optimized");
  offsets_near(c, r.offsets, {0.004, kTwoPi * 0.52e6, -0.026 * kPi}, "optimum");
  c.near(d0, 0.9974, 0.001, "decoherent uncorrected");
  c.at_least(d1, 0.9985, "decoherent optimized");
  c.at_most(dt, 300.0, "runtime[s]");
  return c;
}

struct FitRef {
  ScenarioKind gate;
  Axis axis;
  double a, b, c;
};

Checks quadratic_fits() {
  Checks c;
  const FitRef refs[] = {
      {ScenarioKind::Not, Axis::Amp, -1.306, -0.0045, 0.996},
      {ScenarioKind::Not, Axis::Det, -0.0044, -0.0045, 0.996},
      {ScenarioKind::Not, Axis::Phase, -4.2966, 0.0, 0.994},
      {ScenarioKind::Hadamard, Axis::Amp, -1.683, 0.1317, 0.9945},
      {ScenarioKind::Hadamard, Axis::Det, -0.0033, -0.003, 0.9948},
      {ScenarioKind::Hadamard, Axis::Phase, -2.372, -0.0824, 0.9945},
      {ScenarioKind::Iswap, Axis::Amp, -1.132, -0.016, 0.997},
      {ScenarioKind::Iswap, Axis::Det, -0.011, 0.005, 0.998},
      {ScenarioKind::Iswap, Axis::Phase, -2.201, 0.0023, 0.998},
  };
  for (const auto& ref : refs) {
    const Scenario s = make_scenario(ref.gate);
    SweepSpec spec;
    spec.axis = ref.axis;
    const double half = ref.axis == Axis::Amp ? 0.1
                        : ref.axis == Axis::Det ? kTwoPi * 5e6
                                                : 0.15 * kPi;
    spec.lo = -half;
    spec.hi = half;
    spec.n_points = 41;
    const QuadFit f = fit_quadratic(sweep(make_objective(s, Measure::AveragedClosed), spec, g_threads));
    const std::string name = std::string(to_string(ref.gate)) + "/" + to_string(ref.axis);
    c.note(name + " (" + Checks::fmt(f.a) + ", " + Checks::fmt(f.b) + ", " + Checks::fmt(f.c) + ")");
    c.expect(f.a < 0.0, name + " curvature not negative");
    c.near(f.a, ref.a, 0.25 * std::abs(ref.a), name + " a");
    c.near(f.c, ref.c, 0.002, name + " c");
  }
  return c;
}

Checks stirap() {
  Checks c;
  const Scenario s = make_scenario(ScenarioKind::Stirap);
  const double f0 = evaluate(s, {}, Measure::StateClosed);
  const auto r = optimize_offsets(make_objective(s, Measure::StateClosed), {}, 7, g_threads);
  const double d0 = evaluate(s, {}, Measure::StateOpen);
  const double d1 = evaluate(s, r.offsets, Measure::StateOpen);
  const auto traj = population_trajectory(s, {}, false, s.transfer_from, 20, false);
  const auto to = std::find(s.labels.begin(), s.labels.end(), s.transfer_to) - s.labels.begin();
  const double p_free = traj.back().populations[to];
  c.note("leak-only " + Checks::fmt(f0) + " -> " + Checks::fmt(r.fidelity) + " at " +
         fmt_offsets(r.offsets));
  c.note("decoherent " + Checks::fmt(d0) + " -> " + Checks::fmt(d1));
  c.note("leak-free transfer " + Checks::fmt(p_free));
  c.near(f0, 0.9988, 0.001, "leak-only uncorrected");
  c.at_least(r.fidelity, 0.9995, "leak-only optimized");
  c.near(d0, 0.9980, 0.001, "decoherent uncorrected");
  c.at_least(d1, 0.9989, "decoherent optimized");
  offsets_near(c, r.offsets, {-0.026, kTwoPi * 1.04e6, -0.03 * kPi}, "optimum");
  c.at_least(p_free, 1.0 - 1e-9, "leak-free transfer");
  return c;
}

Checks gtc() {
  Checks c;
  const ScenarioOptions base;
  const Scenario g = make_scenario(ScenarioKind::Gtc, base);
  const double f_free = trace_gate_fidelity(scenario_unitary(g, {}, false), gtc_target(base.gtc),
                                            {"0", "1"});
  const auto off_gtc = optimize_offsets(make_objective(g, Measure::Trace), {}, 7, g_threads).offsets;
  const auto off_rabi = optimum(g_had, ScenarioKind::Hadamard).offsets;
  const auto rows =
      gtc_crosstalk_study(linspace(0.0, kTwoPi * 2e6, 41), base, off_gtc, off_rabi, g_threads);
  bool ordered = true;
  double worst_margin = 1.0;
  for (const auto& r : rows) {
    if (r.zeta <= 0.0) continue;
    worst_margin = std::min(worst_margin, r.gtc - r.rabi);
    ordered = ordered && (1.0 - r.gtc <= 1.0 - r.rabi);
  }
  c.note("leak-free F " + Checks::fmt(f_free));
  c.note("zeta=0 GTC+SSO " + Checks::fmt(rows.front().gtc) + " Rabi+SSO " +
         Checks::fmt(rows.front().rabi));
  c.note("min (F_gtc - F_rabi) over zeta>0 " + Checks::fmt(worst_margin));
  c.at_least(f_free, 1.0 - 1e-6, "leak-free composed gate");
  c.at_least(rows.front().gtc, 0.9985, "GTC+SSO at zeta=0");
  c.expect(ordered, "GTC+SSO infidelity exceeds Rabi+SSO at some zeta");
  return c;
}

Checks appendix_a() {
  Checks c;
  struct Case {
    ScenarioKind kind;
    GateCache* cache;
    double scale;
    CalibrationRanges ranges;
    double min_required;
    double quantized_required;
  };
  const PhysicalParams p;
  const Case cases[] = {
      {ScenarioKind::Not, &g_not, p.omega_m, single_qubit_calibration(), 0.999, 0.9996},
      {ScenarioKind::Hadamard, &g_had, p.omega_m, single_qubit_calibration(), 0.999, 0.9990},
      {ScenarioKind::Iswap, &g_iswap, p.g12, two_qubit_calibration(), 0.9985, 0.9983},
  };
  for (const auto& k : cases) {
    const Scenario s = make_scenario(k.kind);
    const OffsetSet off = optimum(*k.cache, k.kind).offsets;
    const auto t = robustness_grid(make_objective(s, Measure::AveragedOpen), off, k.ranges, g_threads);
    const double det_res = kTwoPi * 0.1e6;
    const OffsetSet q = quantize_offsets(off, det_res / k.scale, det_res, 0.01 * kPi);
    const double fq = evaluate(s, q, Measure::AveragedOpen);
    const std::string name = to_string(k.kind);
    c.note(name + " robustness min " + Checks::fmt(t.min_fidelity()) + " center " +
           Checks::fmt(t.center_fidelity()) + ", quantized " + Checks::fmt(fq));
    c.at_least(t.min_fidelity(), k.min_required, name + " robustness min");
    c.at_least(fq, k.quantized_required, name + " quantized");
  }
  return c;
}

Checks appendix_b() {
  Checks c;
  for (ScenarioKind k : {ScenarioKind::Not, ScenarioKind::Hadamard}) {
    const DragComparison d = drag_compare(k, {}, 7, g_threads);
    const std::string name = to_string(k);
    c.note(name + " uncorrected " + Checks::fmt(d.uncorrected) + " DRAG " + Checks::fmt(d.drag) +
           " SSO " + Checks::fmt(d.sso));
    c.at_least(d.drag - d.uncorrected, 0.002, name + " DRAG gain");
    c.at_least(d.sso - d.uncorrected, 0.002, name + " SSO gain");
    c.at_most(std::abs(d.sso - d.drag), 0.002 - 1e-15, name + " |SSO-DRAG|");
  }
  return c;
}

Checks property_suite() {
  Checks c;
  const SingleQubitModel m = not_model();
  const Hamiltonian h = [&](double t) { return h_single(m, {}, t, true); };
  const int n = auto_steps(h, m.duration);

  double unitarity = 0.0;
  for (ScenarioKind k : {ScenarioKind::Not, ScenarioKind::Hadamard, ScenarioKind::Iswap,
                         ScenarioKind::Stirap, ScenarioKind::Gtc}) {
    const Scenario s = make_scenario(k);
    const Matrix u = scenario_unitary(s, {}).entries();
    unitarity = std::max(unitarity, (u.adjoint() * u - Matrix::Identity(u.rows(), u.cols())).norm());
  }
  c.note("unitarity defect " + Checks::fmt(unitarity));
  c.at_most(unitarity, 1e-9, "unitarity");

  const Scenario ns = make_scenario(ScenarioKind::Not);
  const auto rho0 = DensityMatrix::pure(StateVector::basis(ns.labels, "1"));
  const auto ev = lindblad_evolve(ns.bind({}, true), rho0,
                                  ns.collapse, ns.duration, ns.integrator);
  c.note("trace defect " + Checks::fmt(ev.diagnostics.trace_defect) + ", min eigenvalue " +
         Checks::fmt(ev.diagnostics.min_eigenvalue));
  c.at_most(ev.diagnostics.trace_defect, 1e-10, "trace");
  c.at_least(ev.diagnostics.min_eigenvalue, -1e-10, "positivity");

  IntegratorConfig a;
  a.n_steps = n;
  IntegratorConfig b = a;
  b.n_steps = 2 * n;
  IntegratorConfig r4 = a;
  r4.method = IntegratorMethod::Rk4;
  const Operator ua = *propagate_unitary(h, m.duration, a).final_unitary;
  const Operator ub = *propagate_unitary(h, m.duration, b).final_unitary;
  const Operator ur = *propagate_unitary(h, m.duration, r4).final_unitary;
  const double halving = std::abs(trace_gate_fidelity(ua, not_target(), {"0", "1"}) -
                                  trace_gate_fidelity(ub, not_target(), {"0", "1"}));
  const double cross = (ua.entries() - ur.entries()).norm();
  c.note("step halving " + Checks::fmt(halving) + ", cross integrator " + Checks::fmt(cross));
  c.at_most(halving, 1e-6, "step halving");
  c.at_most(cross, 1e-6, "cross integrator");

  LadderModel lm = stirap_model();
  lm.phi01 = 0.3;
  lm.phi12 = -0.7;
  double dark_res = 0.0;
  for (double f : {0.1, 0.37, 0.5, 0.8}) {
    const Matrix hl = h_ladder(lm, {}, f * lm.tau, false).entries();
    const double w01 = std::abs(hl(0, 1));
    const double w12 = std::abs(hl(1, 2));
    Vector dark = Vector::Zero(hl.rows());
    dark(0) = w12 * std::exp(kI * lm.phi12);
    dark(2) = -w01 * std::exp(-kI * lm.phi01);
    dark.normalize();
    dark_res = std::max(dark_res, (hl * dark).norm());
  }
  c.note("dark-state residual " + Checks::fmt(dark_res / lm.omega_m) + " Omega_m");
  c.at_most(dark_res, 1e-10 * lm.omega_m, "dark state");

  double gamma_err = 0.0;
  for (const GtcParams& g : {GtcParams{}, GtcParams{kPi / 4, 0.3, 0.7 * kPi, 0.1, 0.9 * kPi}}) {
    gamma_err = std::max(gamma_err, std::abs(gtc_geometric_phase(g.chi1, g.chi3, g.xi0, g.xi2()) -
                                             g.gamma));
  }
  c.note("gamma round trip " + Checks::fmt(gamma_err));
  c.at_most(gamma_err, 1e-12, "gamma round trip");
  return c;
}

}  // namespace

int main() {
  g_threads = default_threads();
  const std::vector<std::pair<std::string, std::function<Checks()>>> criteria = {
      {"NOT gate leak-only", not_gate},
      {"Hadamard leak-only", hadamard_gate},
      {"Decoherent single-qubit", decoherent_single},
      {"iSWAP", iswap_gate},
      {"Quadratic fits", quadratic_fits},
      {"STIRAP", stirap},
      {"GTC", gtc},
      {"Calibration tolerance and precision", appendix_a},
      {"DRAG comparison", appendix_b},
      {"Property suite", property_suite},
  };
  int failed = 0;
  for (const auto& [name, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Checks c;
    try {
      c = run();
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    if (!c.ok()) ++failed;
    std::printf("%s %s (%.1f s): %s\n", c.ok() ? "PASS" : "FAIL", name.c_str(), seconds_since(t0),
                c.detail().c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
