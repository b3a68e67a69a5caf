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

#include <cmath>
#include <limits>
#include <stdexcept>

#include <gtest/gtest.h>

#include "leakctl/tuneup.hpp"

namespace leakctl {
namespace {

// Smooth synthetic objective peaked at `peak`.
Objective synthetic(const OffsetSet& peak) {
  return [peak](const OffsetSet& o) {
    const double a = (o.amp - peak.amp) / 0.1;
    const double d = (o.det - peak.det) / (kTwoPi * 5e6);
    const double p = (o.phase - peak.phase) / (0.1 * kPi);
    return 1.0 - 0.01 * (a * a + d * d + p * p) - 0.002 * a * d;
  };
}

double max_fidelity(const SweepTable& t) {
  double m = 0.0;
  for (const auto& r : t.rows) m = std::max(m, r.fidelity);
  return m;
}

TEST(Axis, ParseAndNormalize) {
  EXPECT_EQ(parse_axis("amp"), Axis::Amp);
  EXPECT_EQ(parse_axis("det"), Axis::Det);
  EXPECT_EQ(parse_axis("phase"), Axis::Phase);
  EXPECT_THROW(parse_axis("gain"), ConfigError);
  EXPECT_STREQ(to_string(Axis::Det), "det");
  EXPECT_NEAR(to_normalized(Axis::Det, kTwoPi * 1.5e6), 1.5, 1e-12);
  EXPECT_NEAR(to_normalized(Axis::Phase, -0.04 * kPi), -0.04, 1e-15);
  EXPECT_EQ(to_normalized(Axis::Amp, 0.003), 0.003);
  for (Axis a : {Axis::Amp, Axis::Det, Axis::Phase}) {
    EXPECT_NEAR(to_physical(a, to_normalized(a, 0.37)), 0.37, 1e-15);
    OffsetSet o;
    set_axis(o, a, 0.25);
    EXPECT_EQ(get_axis(o, a), 0.25);
  }
}

TEST(Linspace, EndpointsAndSpacing) {
  const auto v = linspace(-1.0, 1.0, 5);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), -1.0);
  EXPECT_EQ(v.back(), 1.0);
  EXPECT_EQ(v[2], 0.0);
  EXPECT_EQ(linspace(2.0, 3.0, 1), std::vector<double>{2.0});
}

TEST(SweepSpec, Validation) {
  SweepSpec s;
  s.lo = 0.1;
  s.hi = 0.1;
  EXPECT_THROW(s.validate(), ConfigError);
  s.lo = -0.1;
  EXPECT_NO_THROW(s.validate());
  s.n_points = 4;
  EXPECT_THROW(s.validate(), ConfigError);
  s.n_points = 5;
  s.axis2 = Axis::Amp;
  s.lo2 = -1.0;
  s.hi2 = 1.0;
  s.n_points2 = 5;
  EXPECT_THROW(s.validate(), ConfigError);
  s.axis2 = Axis::Phase;
  EXPECT_NO_THROW(s.validate());
}

TEST(Sweep, AxisOrderAndFailureFlagging) {
  SweepSpec s;
  s.axis = Axis::Det;
  s.lo = -kTwoPi * 2e6;
  s.hi = kTwoPi * 2e6;
  s.n_points = 5;
  s.axis2 = Axis::Phase;
  s.lo2 = -0.1 * kPi;
  s.hi2 = 0.1 * kPi;
  s.n_points2 = 7;
  s.fixed_offsets.amp = 0.01;
  const Objective f = [](const OffsetSet& o) {
    if (o.det == 0.0 && o.phase == 0.0) throw std::runtime_error("boom");
    return 1.0 - o.det * o.det * 1e-16;
  };
  const SweepTable t = sweep(f, s, 3);
  ASSERT_EQ(t.rows.size(), 35u);
  int failed = 0;
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const auto& r = t.rows[k];
    EXPECT_EQ(r.i, static_cast<int>(k / 7));
    EXPECT_EQ(r.j, static_cast<int>(k % 7));
    EXPECT_EQ(r.offsets.amp, 0.01);
    if (!r.ok) {
      ++failed;
      EXPECT_EQ(r.i, 2);
      EXPECT_EQ(r.j, 3);
      EXPECT_EQ(r.error, "boom");
    }
  }
  EXPECT_EQ(failed, 1);
  EXPECT_NEAR(t.rows.front().x, -2.0, 1e-12);
  EXPECT_NEAR(t.rows.back().y, 0.1, 1e-12);
}

TEST(Sweep, DeterministicAcrossThreadCounts) {
  const Scenario s = make_scenario(ScenarioKind::Not);
  SweepSpec spec;
  spec.axis = Axis::Amp;
  spec.lo = -0.05;
  spec.hi = 0.05;
  spec.n_points = 7;
  const auto a = sweep(make_objective(s, Measure::Trace), spec, 1);
  const auto b = sweep(make_objective(s, Measure::Trace), spec, 4);
  for (std::size_t k = 0; k < a.rows.size(); ++k) EXPECT_EQ(a.rows[k].fidelity, b.rows[k].fidelity);
}

TEST(FitQuadratic, ExactParabola) {
  std::vector<double> x, y;
  for (double v : linspace(-0.15, 0.15, 11)) {
    x.push_back(v);
    y.push_back(-4.2966 * v * v + 0.013 * v + 0.994);
  }
  const QuadFit f = fit_quadratic(x, y);
  EXPECT_NEAR(f.a, -4.2966, 1e-10);
  EXPECT_NEAR(f.b, 0.013, 1e-10);
  EXPECT_NEAR(f.c, 0.994, 1e-10);
  EXPECT_LT(f.rms, 1e-12);
  EXPECT_EQ(f.n, 11);
}

TEST(FitQuadratic, RejectsDegenerateInput) {
  EXPECT_THROW(fit_quadratic({1, 1, 1, 1, 1}, {0, 1, 2, 3, 4}), FitError);
  EXPECT_THROW(fit_quadratic({1, 2, 1, 2, 1}, {0, 1, 0, 1, 0}), FitError);
  EXPECT_THROW(fit_quadratic({1, 2, 3, 4}, {0, 1, 2, 3}), FitError);
  EXPECT_THROW(fit_quadratic({1, 2, 3, 4, 5}, {0, 1, 2, 3}), FitError);
}

TEST(FitQuadratic, NotPhaseSweepHasNoLinearTerm) {
  SweepSpec s;
  s.axis = Axis::Phase;
  s.lo = -0.15 * kPi;
  s.hi = 0.15 * kPi;
  const QuadFit f = fit_quadratic(sweep(make_objective(make_scenario(ScenarioKind::Not),
                                                       Measure::AveragedClosed),
                                        s));
  EXPECT_LT(std::abs(f.b), 0.01);
  EXPECT_LT(f.a, 0.0);
}

TEST(FitQuadratic, NotAmplitudeSweep) {
  SweepSpec s;
  s.axis = Axis::Amp;
  s.lo = -0.1;
  s.hi = 0.1;
  const QuadFit f = fit_quadratic(sweep(make_objective(make_scenario(ScenarioKind::Not),
                                                       Measure::AveragedClosed),
                                        s));
  EXPECT_NEAR(f.a, -1.306, 0.25 * 1.306);
  EXPECT_NEAR(f.c, 0.996, 0.002);
}

TEST(FitQuadratic, TwoDimensionalSweepRejected) {
  SweepTable t;
  t.spec.axis2 = Axis::Phase;
  EXPECT_THROW(fit_quadratic(t), FitError);
}

TEST(Sweep, HadamardJointDetuningPhaseBeatsSingleAxes) {
  const Objective f = make_objective(make_scenario(ScenarioKind::Hadamard), Measure::AveragedClosed);
  SweepSpec det;
  det.axis = Axis::Det;
  det.lo = -kTwoPi * 5e6;
  det.hi = kTwoPi * 5e6;
  det.n_points = 21;
  SweepSpec phase;
  phase.axis = Axis::Phase;
  phase.lo = -0.03 * kPi;
  phase.hi = 0.03 * kPi;
  phase.n_points = 9;
  SweepSpec joint = det;
  joint.axis2 = Axis::Phase;
  joint.lo2 = phase.lo;
  joint.hi2 = phase.hi;
  joint.n_points2 = phase.n_points;
  const double m2 = max_fidelity(sweep(f, joint));
  EXPECT_GT(m2, max_fidelity(sweep(f, det)));
  EXPECT_GT(m2, max_fidelity(sweep(f, phase)));
}

TEST(NelderMead, Rosenbrock) {
  NelderMeadOptions o;
  o.f_spread_tol = 1e-16;
  o.x_tol = 1e-12;
  o.max_evals = 20000;
  const auto r = nelder_mead(
      [](const std::vector<double>& x) {
        return 100.0 * std::pow(x[1] - x[0] * x[0], 2) + std::pow(1.0 - x[0], 2);
      },
      {-1.2, 1.0}, {0.5, 0.5}, o);
  EXPECT_TRUE(r.converged);
  EXPECT_NEAR(r.x[0], 1.0, 1e-4);
  EXPECT_NEAR(r.x[1], 1.0, 1e-4);
  EXPECT_LT(r.fx, 1e-8);
}

TEST(NelderMead, Errors) {
  const auto nan_f = [](const std::vector<double>&) {
    return std::numeric_limits<double>::quiet_NaN();
  };
  EXPECT_THROW(nelder_mead(nan_f, {0.0}, {1.0}), OptError);
  EXPECT_THROW(nelder_mead(nan_f, {0.0, 0.0}, {1.0}), OptError);
}

TEST(OptimizeOffsets, RecoversSyntheticPeak) {
  const OffsetSet peak{0.031, -kTwoPi * 1.3e6, 0.027 * kPi};
  const auto r = optimize_offsets(synthetic(peak));
  EXPECT_NEAR(r.offsets.amp, peak.amp, 1e-3);
  EXPECT_NEAR(r.offsets.det, peak.det, kTwoPi * 0.05e6);
  EXPECT_NEAR(r.offsets.phase, peak.phase, 0.001 * kPi);
  EXPECT_NEAR(r.fidelity, 1.0, 1e-6);
  EXPECT_EQ(r.baseline, synthetic(peak)({}));
  EXPECT_GT(r.evaluations, 343);
}

TEST(OptimizeOffsets, NeverBelowBaseline) {
  // A spike at the origin that the grid and the simplex cannot improve on.
  const Objective f = [](const OffsetSet& o) { return o.is_zero() ? 1.0 : 0.5; };
  const auto r = optimize_offsets(f);
  EXPECT_EQ(r.fidelity, 1.0);
  EXPECT_TRUE(r.offsets.is_zero());
}

TEST(OptimizeOffsets, DeterministicAndValidated) {
  const OffsetSet peak{-0.02, kTwoPi * 0.7e6, -0.01 * kPi};
  const auto a = optimize_offsets(synthetic(peak), {}, 5, 1);
  const auto b = optimize_offsets(synthetic(peak), {}, 5, 3);
  EXPECT_EQ(a.offsets, b.offsets);
  EXPECT_EQ(a.fidelity, b.fidelity);
  EXPECT_THROW(optimize_offsets(synthetic(peak), {}, 0), ConfigError);
  EXPECT_THROW(optimize_offsets(synthetic(peak), {0.0, 1.0, 1.0}), ConfigError);
  const Objective bad = [](const OffsetSet&) { return std::numeric_limits<double>::infinity(); };
  EXPECT_THROW(optimize_offsets(bad), OptError);
}

TEST(OptimizeOffsets, NotGate) {
  const Scenario s = make_scenario(ScenarioKind::Not);
  const auto r = optimize_offsets(make_objective(s, Measure::Trace));
  EXPECT_GE(r.fidelity, 0.9995);
  EXPECT_GT(r.fidelity, r.baseline);
  EXPECT_NEAR(r.offsets.amp, 0.003, 0.01);
  EXPECT_NEAR(r.offsets.det, -kTwoPi * 1.55e6, kTwoPi * 0.5e6);
}

TEST(OptimizeOffsets, HadamardGate) {
  const Scenario s = make_scenario(ScenarioKind::Hadamard);
  const auto r = optimize_offsets(make_objective(s, Measure::Trace));
  EXPECT_GE(r.fidelity, 0.999);
}

TEST(Robustness, GridShapeCenterAndDeterminism) {
  const OffsetSet opt{0.01, kTwoPi * 0.3e6, 0.0};
  const CalibrationRanges cr = single_qubit_calibration();
  const auto a = robustness_grid(synthetic(opt), opt, cr, 1);
  const auto b = robustness_grid(synthetic(opt), opt, cr, 4);
  ASSERT_EQ(a.rows.size(), static_cast<std::size_t>(2 * cr.n * cr.n));
  for (std::size_t k = 0; k < a.rows.size(); ++k) {
    EXPECT_EQ(a.rows[k].fidelity, b.rows[k].fidelity);
    EXPECT_EQ(a.rows[k].error, b.rows[k].error);
  }
  EXPECT_EQ(a.center_fidelity(), 1.0);
  EXPECT_LT(a.min_fidelity(), 1.0);
  EXPECT_EQ(a.rows.front().panel, "phase_det");
  EXPECT_EQ(a.rows.back().panel, "amp_det");
  EXPECT_NEAR(a.rows.back().error.amp, cr.amp, 1e-15);
  EXPECT_EQ(a.rows.back().error.phase, 0.0);
  CalibrationRanges even = cr;
  even.n = 4;
  EXPECT_THROW(robustness_grid(synthetic(opt), opt, even), ConfigError);
}

TEST(Robustness, CenterEqualsOptimizedDecoherentFidelity) {
  const Scenario s = make_scenario(ScenarioKind::Not);
  const auto opt = optimize_offsets(make_objective(s, Measure::Trace));
  CalibrationRanges cr = single_qubit_calibration();
  cr.n = 3;
  const auto t = robustness_grid(make_objective(s, Measure::AveragedOpen), opt.offsets, cr);
  EXPECT_EQ(t.center_fidelity(), evaluate(s, opt.offsets, Measure::AveragedOpen));
  EXPECT_GE(t.center_fidelity(), t.min_fidelity());
}

TEST(Quantize, RoundsToResolution) {
  EXPECT_TRUE(quantize_offsets({}, 1e-3, kTwoPi * 0.1e6, 0.01 * kPi).is_zero());
  const OffsetSet q =
      quantize_offsets({0.00322, -kTwoPi * 1.5612e6, -0.0044 * kPi}, 1e-3, kTwoPi * 0.1e6, 0.01 * kPi);
  EXPECT_NEAR(q.amp, 0.003, 1e-15);
  EXPECT_NEAR(q.det, -kTwoPi * 1.6e6, 1e-6);
  EXPECT_EQ(q.phase, 0.0);
  EXPECT_FALSE(std::signbit(q.phase));
  const OffsetSet fine =
      quantize_offsets({0.0, -kTwoPi * 1.5612e6, 0.0066 * kPi}, 1e-4, kTwoPi * 0.01e6, 0.001 * kPi);
  EXPECT_NEAR(fine.det, -kTwoPi * 1.56e6, 1e-6);
  EXPECT_NEAR(fine.phase, 0.007 * kPi, 1e-15);
  EXPECT_THROW(quantize_offsets({}, 0.0, 1.0, 1.0), ConfigError);
}

TEST(Quantize, NotFinePrecisionFidelity) {
  const Scenario s = make_scenario(ScenarioKind::Not);
  const auto opt = optimize_offsets(make_objective(s, Measure::Trace));
  const double det_res = kTwoPi * 0.01e6;
  const OffsetSet q =
      quantize_offsets(opt.offsets, det_res / PhysicalParams{}.omega_m, det_res, 0.001 * kPi);
  EXPECT_NEAR(evaluate(s, q, Measure::AveragedOpen), 0.9998, 0.0007);
}

TEST(DragCompare, NotGate) {
  const DragComparison d = drag_compare(ScenarioKind::Not, {});
  EXPECT_GT(d.drag, d.uncorrected);
  EXPECT_GT(d.sso, d.uncorrected);
  EXPECT_LT(std::abs(d.sso - d.drag), 0.002);
  EXPECT_THROW(drag_compare(ScenarioKind::Iswap, {}), ConfigError);
}

TEST(DragCompare, LargeAnharmonicityConverges) {
  ScenarioOptions o;
  o.params.alpha *= 100.0;
  const DragComparison d = drag_compare(ScenarioKind::Not, o, 5);
  EXPECT_LT(std::abs(d.drag - d.uncorrected), 5e-4);
  EXPECT_LT(std::abs(d.sso - d.uncorrected), 5e-4);
  EXPECT_LT(std::abs(d.sso - d.drag), 5e-4);
}

TEST(Crosstalk, SpectatorFlipEqualsZetaSignFlip) {
  // sigma_z on the spectator flips the sign of the ZZ shift on the target.
  for (ScenarioKind k : {ScenarioKind::GtcCrosstalk, ScenarioKind::RabiCrosstalk}) {
    ScenarioOptions plus;
    plus.zeta = kTwoPi * 1e6;
    ScenarioOptions minus = plus;
    minus.zeta = -plus.zeta;
    const Scenario sp = make_scenario(k, plus);
    const Scenario sm = make_scenario(k, minus);
    ASSERT_EQ(sp.comp_variants.size(), 2u);
    Scenario sp1 = sp;
    sp1.comp_variants = {sp.comp_variants[1]};
    Scenario sm0 = sm;
    sm0.comp_variants = {sm.comp_variants[0]};
    EXPECT_NEAR(evaluate(sp1, {}, Measure::AveragedClosed), evaluate(sm0, {}, Measure::AveragedClosed),
                1e-10);
  }
}

TEST(Crosstalk, GtcLessSensitiveThanRabi) {
  ScenarioOptions base;
  const auto off_gtc =
      optimize_offsets(make_objective(make_scenario(ScenarioKind::Gtc, base), Measure::Trace)).offsets;
  const auto off_rabi =
      optimize_offsets(make_objective(make_scenario(ScenarioKind::Hadamard, base), Measure::Trace))
          .offsets;
  const auto rows = gtc_crosstalk_study(linspace(0.0, kTwoPi * 2e6, 3), base, off_gtc, off_rabi, 2);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_EQ(rows[0].zeta, 0.0);
  EXPECT_GE(rows[0].gtc, 0.9985);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_LE(1.0 - rows[i].gtc, 1.0 - rows[i].rabi) << "zeta index " << i;
  }
}

TEST(Objective, MatchesEvaluate) {
  const Scenario s = make_scenario(ScenarioKind::Not);
  const OffsetSet o{0.01, kTwoPi * 0.5e6, 0.02};
  EXPECT_EQ(make_objective(s, Measure::AveragedClosed)(o), evaluate(s, o, Measure::AveragedClosed));
}

}  // namespace
}  // namespace leakctl
