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

#include "leakctl/tuneup.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <string>
#include <thread>

namespace leakctl {

namespace {

// Runs body(k) for k in [0, n) on up to `threads` workers. Results must be
// written to per-index slots by the body.
void parallel_for(int n, int threads, const std::function<void(int)>& body) {
  threads = std::max(1, std::min(threads, n));
  if (threads == 1) {
    for (int k = 0; k < n; ++k) body(k);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (int k = next++; k < n; k = next++) body(k);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

Objective make_objective(const Scenario& s, Measure m) {
  return [s, m](const OffsetSet& off) { return evaluate(s, off, m); };
}

int default_threads() {
  if (const char* env = std::getenv("LEAKCTL_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Axis parse_axis(const std::string& name) {
  if (name == "amp") return Axis::Amp;
  if (name == "det") return Axis::Det;
  if (name == "phase") return Axis::Phase;
  throw ConfigError("unknown sweep parameter '" + name + "' (expected amp, det or phase)");
}

const char* to_string(Axis a) {
  switch (a) {
    case Axis::Amp:
      return "amp";
    case Axis::Det:
      return "det";
    case Axis::Phase:
      return "phase";
  }
  return "unknown";
}

double to_normalized(Axis a, double v) {
  switch (a) {
    case Axis::Amp:
      return v;
    case Axis::Det:
      return v / kMHz;
    case Axis::Phase:
      return v / kPi;
  }
  return v;
}

double to_physical(Axis a, double v) {
  switch (a) {
    case Axis::Amp:
      return v;
    case Axis::Det:
      return v * kMHz;
    case Axis::Phase:
      return v * kPi;
  }
  return v;
}

void set_axis(OffsetSet& off, Axis a, double v) {
  switch (a) {
    case Axis::Amp:
      off.amp = v;
      break;
    case Axis::Det:
      off.det = v;
      break;
    case Axis::Phase:
      off.phase = v;
      break;
  }
}

double get_axis(const OffsetSet& off, Axis a) {
  switch (a) {
    case Axis::Amp:
      return off.amp;
    case Axis::Det:
      return off.det;
    case Axis::Phase:
      return off.phase;
  }
  return 0.0;
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> out(n);
  for (int i = 0; i < n; ++i) out[i] = n == 1 ? lo : lo + (hi - lo) * i / (n - 1);
  return out;
}

void SweepSpec::validate() const {
  if (!(lo < hi)) throw ConfigError("sweep range must satisfy lo < hi");
  if (n_points < 5) throw ConfigError("sweep needs at least 5 points");
  if (axis2) {
    if (!(lo2 < hi2)) throw ConfigError("second sweep range must satisfy lo < hi");
    if (n_points2 < 5) throw ConfigError("second sweep axis needs at least 5 points");
    if (*axis2 == axis) throw ConfigError("2-D sweep axes must differ");
  }
  if (!fixed_offsets.is_finite()) throw ConfigError("fixed offsets must be finite");
}

SweepTable sweep(const Objective& f, const SweepSpec& spec, int threads) {
  spec.validate();
  const auto xs = linspace(spec.lo, spec.hi, spec.n_points);
  const auto ys = spec.axis2 ? linspace(spec.lo2, spec.hi2, spec.n_points2) : std::vector<double>{0.0};
  SweepTable table;
  table.spec = spec;
  table.rows.resize(xs.size() * ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = 0; j < ys.size(); ++j) {
      SweepRow& r = table.rows[i * ys.size() + j];
      r.i = static_cast<int>(i);
      r.j = static_cast<int>(j);
      r.offsets = spec.fixed_offsets;
      set_axis(r.offsets, spec.axis, xs[i]);
      r.x = to_normalized(spec.axis, xs[i]);
      if (spec.axis2) {
        set_axis(r.offsets, *spec.axis2, ys[j]);
        r.y = to_normalized(*spec.axis2, ys[j]);
      }
    }
  }
  parallel_for(static_cast<int>(table.rows.size()), threads, [&](int k) {
    SweepRow& r = table.rows[k];
    try {
      r.fidelity = f(r.offsets);
      if (!std::isfinite(r.fidelity)) {
        r.ok = false;
        r.error = "non-finite fidelity";
      }
    } catch (const std::exception& e) {
      r.ok = false;
      r.fidelity = std::nan("");
      r.error = e.what();
    }
  });
  return table;
}

QuadFit fit_quadratic(const std::vector<double>& x, const std::vector<double>& y) {
  if (x.size() != y.size()) throw FitError("x and y lengths differ");
  if (x.size() < 5) throw FitError("quadratic fit needs at least 5 points");
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = x[i] * x[i];
    a(i, 1) = x[i];
    a(i, 2) = 1.0;
    b(i) = y[i];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(a);
  qr.setThreshold(1e-12);
  if (qr.rank() < 3) throw FitError("rank-deficient design matrix");
  const Eigen::VectorXd c = qr.solve(b);
  QuadFit fit{c(0), c(1), c(2), 0.0, static_cast<int>(n)};
  fit.rms = std::sqrt((a * c - b).squaredNorm() / n);
  return fit;
}

QuadFit fit_quadratic(const SweepTable& table) {
  if (table.spec.axis2) throw FitError("quadratic fit needs a 1-D sweep");
  std::vector<double> x, y;
  for (const auto& r : table.rows) {
    if (!r.ok) continue;
    x.push_back(r.x);
    y.push_back(r.fidelity);
  }
  return fit_quadratic(x, y);
}

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& x0, const std::vector<double>& step,
                             const NelderMeadOptions& opt) {
  const std::size_t d = x0.size();
  if (step.size() != d) throw OptError("step size length must match x0");
  NelderMeadResult res;
  auto eval = [&](const std::vector<double>& x) {
    const double v = f(x);
    ++res.evaluations;
    if (!std::isfinite(v)) throw OptError("objective returned a non-finite value");
    return v;
  };

  std::vector<std::vector<double>> pts(d + 1, x0);
  for (std::size_t i = 0; i < d; ++i) pts[i + 1][i] += step[i];
  std::vector<double> fv(d + 1);
  for (std::size_t i = 0; i <= d; ++i) fv[i] = eval(pts[i]);

  std::vector<std::size_t> order(d + 1);
  auto combine = [&](const std::vector<double>& c, const std::vector<double>& p, double t) {
    std::vector<double> out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = c[k] + t * (p[k] - c[k]);
    return out;
  };

  while (true) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return fv[a] < fv[b]; });
    const std::size_t best = order.front();
    const std::size_t worst = order.back();
    const std::size_t second = order[d - 1];

    double size = 0.0;
    for (std::size_t i = 0; i <= d; ++i) {
      for (std::size_t k = 0; k < d; ++k) size = std::max(size, std::abs(pts[i][k] - pts[best][k]));
    }
    if (fv[worst] - fv[best] < opt.f_spread_tol || size < opt.x_tol) {
      res.converged = true;
      break;
    }
    if (res.evaluations >= opt.max_evals) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == worst) continue;
      for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k] / d;
    }
    const auto xr = combine(centroid, pts[worst], -opt.reflection);
    const double fr = eval(xr);
    if (fr < fv[best]) {
      const auto xe = combine(centroid, pts[worst], -opt.reflection * opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        pts[worst] = xe;
        fv[worst] = fe;
      } else {
        pts[worst] = xr;
        fv[worst] = fr;
      }
      continue;
    }
    if (fr < fv[second]) {
      pts[worst] = xr;
      fv[worst] = fr;
      continue;
    }
    const bool outside = fr < fv[worst];
    const auto xc = outside ? combine(centroid, xr, opt.contraction)
                            : combine(centroid, pts[worst], opt.contraction);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fv[worst])) {
      pts[worst] = xc;
      fv[worst] = fc;
      continue;
    }
    for (std::size_t i = 0; i <= d; ++i) {
      if (i == best) continue;
      pts[i] = combine(pts[best], pts[i], opt.shrink);
      fv[i] = eval(pts[i]);
    }
  }
  const auto it = std::min_element(fv.begin(), fv.end());
  res.x = pts[it - fv.begin()];
  res.fx = *it;
  return res;
}

OptimizeResult optimize_offsets(const Objective& f, const OffsetBounds& bounds, int seed_grid,
                                int threads, const NelderMeadOptions& nm) {
  if (seed_grid < 1) throw ConfigError("seed_grid must be positive");
  if (!(bounds.amp > 0.0 && bounds.det > 0.0 && bounds.phase > 0.0)) {
    throw ConfigError("offset bounds must be positive");
  }
  const std::vector<double> scale{bounds.amp, bounds.det, bounds.phase};
  auto to_offsets = [&](const std::vector<double>& u) {
    return OffsetSet{u[0] * scale[0], u[1] * scale[1], u[2] * scale[2]};
  };
  auto checked = [&](const OffsetSet& off) {
    const double v = f(off);
    if (!std::isfinite(v)) throw OptError("objective returned a non-finite value");
    return v;
  };

  OptimizeResult res;
  res.baseline = checked({});
  res.evaluations = 1;

  const auto g = seed_grid == 1 ? std::vector<double>{0.0} : linspace(-1.0, 1.0, seed_grid);
  const int n = seed_grid * seed_grid * seed_grid;
  std::vector<double> values(n);
  parallel_for(n, threads, [&](int k) {
    const int i = k / (seed_grid * seed_grid);
    const int j = (k / seed_grid) % seed_grid;
    const int l = k % seed_grid;
    values[k] = checked(to_offsets({g[i], g[j], g[l]}));
  });
  res.evaluations += n;

  std::vector<double> start{0.0, 0.0, 0.0};
  double best = res.baseline;
  for (int k = 0; k < n; ++k) {
    if (values[k] > best) {
      best = values[k];
      const int i = k / (seed_grid * seed_grid);
      const int j = (k / seed_grid) % seed_grid;
      const int l = k % seed_grid;
      start = {g[i], g[j], g[l]};
    }
  }

  // Minimize infidelity inside the unit box; points outside are evaluated at
  // the nearest boundary point and penalized by their distance.
  auto boxed = [&](const std::vector<double>& u) {
    std::vector<double> c(3);
    double pen = 0.0;
    for (int k = 0; k < 3; ++k) {
      c[k] = std::clamp(u[k], -1.0, 1.0);
      pen += (u[k] - c[k]) * (u[k] - c[k]);
    }
    return 1.0 - checked(to_offsets(c)) + pen;
  };
  const double h = seed_grid > 1 ? 1.0 / (seed_grid - 1) : 0.25;
  std::vector<double> x = start;
  double fx = 1.0 - best;
  for (double shrink : {1.0, 0.1}) {
    const auto r = nelder_mead(boxed, x, {h * shrink, h * shrink, h * shrink}, nm);
    res.evaluations += r.evaluations;
    if (r.fx <= fx) {
      fx = r.fx;
      x = r.x;
    }
  }
  for (auto& v : x) v = std::clamp(v, -1.0, 1.0);
  res.offsets = to_offsets(x);
  res.fidelity = checked(res.offsets);
  if (res.fidelity < best) {
    // Never return worse than the best seed (which includes the origin).
    res.offsets = to_offsets(start);
    res.fidelity = best;
  }
  return res;
}

CalibrationRanges single_qubit_calibration() { return {0.02, kTwoPi * 0.2e6, 0.02 * kPi, 9}; }

CalibrationRanges two_qubit_calibration() { return {0.01, kTwoPi * 0.2e6, 0.02 * kPi, 7}; }

double RobustnessTable::min_fidelity() const {
  double m = 1.0;
  for (const auto& r : rows) m = std::min(m, r.fidelity);
  return m;
}

double RobustnessTable::center_fidelity() const {
  for (const auto& r : rows) {
    if (r.error.is_zero()) return r.fidelity;
  }
  return std::nan("");
}

RobustnessTable robustness_grid(const Objective& f, const OffsetSet& off_opt,
                                const CalibrationRanges& ranges, int threads) {
  if (ranges.n < 3 || ranges.n % 2 == 0) throw ConfigError("robustness grid size must be odd and >= 3");
  const auto e_amp = linspace(-ranges.amp, ranges.amp, ranges.n);
  const auto e_det = linspace(-ranges.det, ranges.det, ranges.n);
  const auto e_ph = linspace(-ranges.phase, ranges.phase, ranges.n);
  RobustnessTable t;
  for (const std::string panel : {"phase_det", "amp_det"}) {
    for (int i = 0; i < ranges.n; ++i) {
      for (int j = 0; j < ranges.n; ++j) {
        RobustnessRow r;
        r.panel = panel;
        if (panel == "phase_det") {
          r.error.phase = e_ph[i];
        } else {
          r.error.amp = e_amp[i];
        }
        r.error.det = e_det[j];
        t.rows.push_back(r);
      }
    }
  }
  parallel_for(static_cast<int>(t.rows.size()), threads,
               [&](int k) { t.rows[k].fidelity = f(off_opt + t.rows[k].error); });
  return t;
}

OffsetSet quantize_offsets(const OffsetSet& off, double amp_res, double det_res,
                           double phase_res) {
  if (!(amp_res > 0.0 && det_res > 0.0 && phase_res > 0.0)) {
    throw ConfigError("quantization resolutions must be positive");
  }
  auto q = [](double v, double r) { return std::round(v / r) * r; };
  OffsetSet out{q(off.amp, amp_res), q(off.det, det_res), q(off.phase, phase_res)};
  // Normalize negative zero.
  for (double* v : {&out.amp, &out.det, &out.phase}) {
    if (*v == 0.0) *v = 0.0;
  }
  return out;
}

DragComparison drag_compare(ScenarioKind gate, const ScenarioOptions& opt, int seed_grid,
                            int threads) {
  if (gate != ScenarioKind::Not && gate != ScenarioKind::Hadamard) {
    throw ConfigError("drag_compare supports the NOT and Hadamard gates");
  }
  ScenarioOptions bare = opt;
  bare.drag = false;
  ScenarioOptions drag = opt;
  drag.drag = true;
  const Scenario s_bare = make_scenario(gate, bare);
  const Scenario s_drag = make_scenario(gate, drag);
  DragComparison out;
  out.sso_offsets =
      optimize_offsets(make_objective(s_bare, Measure::Trace), {}, seed_grid, threads).offsets;
  out.uncorrected = evaluate(s_bare, {}, Measure::AveragedOpen);
  out.drag = evaluate(s_drag, {}, Measure::AveragedOpen);
  out.sso = evaluate(s_bare, out.sso_offsets, Measure::AveragedOpen);
  return out;
}

std::vector<CrosstalkRow> gtc_crosstalk_study(const std::vector<double>& zetas,
                                              const ScenarioOptions& opt,
                                              const OffsetSet& off_gtc,
                                              const OffsetSet& off_rabi, int threads) {
  std::vector<CrosstalkRow> rows(zetas.size());
  parallel_for(static_cast<int>(zetas.size()) * 2, threads, [&](int k) {
    const std::size_t i = k / 2;
    ScenarioOptions o = opt;
    o.zeta = zetas[i];
    rows[i].zeta = zetas[i];
    if (k % 2 == 0) {
      rows[i].gtc = evaluate(make_scenario(ScenarioKind::GtcCrosstalk, o), off_gtc, Measure::AveragedOpen);
    } else {
      rows[i].rabi =
          evaluate(make_scenario(ScenarioKind::RabiCrosstalk, o), off_rabi, Measure::AveragedOpen);
    }
  });
  return rows;
}

}  // namespace leakctl
