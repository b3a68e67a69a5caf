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

#include "leakctl/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

namespace leakctl {

ScenarioKind parse_scenario_kind(const std::string& name) {
  if (name == "not") return ScenarioKind::Not;
  if (name == "hadamard") return ScenarioKind::Hadamard;
  if (name == "iswap") return ScenarioKind::Iswap;
  if (name == "stirap") return ScenarioKind::Stirap;
  if (name == "gtc") return ScenarioKind::Gtc;
  if (name == "gtc_crosstalk") return ScenarioKind::GtcCrosstalk;
  if (name == "rabi_crosstalk") return ScenarioKind::RabiCrosstalk;
  throw ConfigError("unknown scenario '" + name + "'");
}

const char* to_string(ScenarioKind k) {
  switch (k) {
    case ScenarioKind::Not:
      return "not";
    case ScenarioKind::Hadamard:
      return "hadamard";
    case ScenarioKind::Iswap:
      return "iswap";
    case ScenarioKind::Stirap:
      return "stirap";
    case ScenarioKind::Gtc:
      return "gtc";
    case ScenarioKind::GtcCrosstalk:
      return "gtc_crosstalk";
    case ScenarioKind::RabiCrosstalk:
      return "rabi_crosstalk";
  }
  return "unknown";
}

const char* to_string(Measure m) {
  switch (m) {
    case Measure::Trace:
      return "trace";
    case Measure::AveragedClosed:
      return "averaged_closed";
    case Measure::AveragedOpen:
      return "averaged_open";
    case Measure::StateClosed:
      return "state_closed";
    case Measure::StateOpen:
      return "state_open";
  }
  return "unknown";
}

Hamiltonian Scenario::bind(const OffsetSet& off, bool include_leak) const {
  return [h = hamiltonian, off, include_leak](double t) { return h(off, t, include_leak); };
}

Matrix not_target() {
  Matrix u = Matrix::Zero(2, 2);
  u(0, 1) = 1.0;
  u(1, 0) = 1.0;
  return u;
}

Matrix hadamard_target() {
  Matrix u(2, 2);
  const double r = 1.0 / std::sqrt(2.0);
  u << r, r, r, -r;
  return u;
}

Matrix iswap_target() {
  Matrix u = Matrix::Zero(4, 4);
  u(0, 0) = 1.0;
  u(1, 2) = kI;
  u(2, 1) = kI;
  u(3, 3) = 1.0;
  return u;
}

namespace {

Scenario single_qubit_scenario(ScenarioKind kind, SingleQubitModel model, Matrix target,
                               const ScenarioOptions& opt) {
  if (opt.drag) model.drag_alpha = -model.alpha;
  model.validate();
  Scenario s;
  s.kind = kind;
  s.duration = model.duration;
  s.labels = default_labels(3);
  s.comp_variants = {{"0", "1"}};
  s.target = std::move(target);
  auto m = std::make_shared<const SingleQubitModel>(std::move(model));
  s.hamiltonian = [m](const OffsetSet& off, double t, bool leak) {
    return h_single(*m, off, t, leak);
  };
  s.collapse = single_transmon_terms(3, opt.params.kappa1, opt.params.kappa_phi);
  return s;
}

Scenario crosstalk_scenario(ScenarioKind kind, SingleQubitModel base, Matrix target,
                            const ScenarioOptions& opt) {
  CrosstalkModel cm;
  cm.base = std::move(base);
  cm.zeta = opt.zeta;
  cm.validate();
  Scenario s;
  s.kind = kind;
  s.duration = cm.base.duration;
  s.labels = {"00", "01", "10", "11", "20", "21"};
  s.comp_variants = {{"00", "10"}, {"01", "11"}};
  s.target = std::move(target);
  auto m = std::make_shared<const CrosstalkModel>(std::move(cm));
  s.hamiltonian = [m](const OffsetSet& off, double t, bool leak) {
    return h_crosstalk(*m, off, t, leak);
  };
  s.collapse = crosstalk_terms(opt.params.kappa1, opt.params.kappa_phi);
  return s;
}

}  // namespace

Scenario make_scenario(ScenarioKind kind, const ScenarioOptions& opt) {
  const PhysicalParams& p = opt.params;
  Scenario s;
  switch (kind) {
    case ScenarioKind::Not:
      s = single_qubit_scenario(kind, not_model(p), not_target(), opt);
      break;
    case ScenarioKind::Hadamard:
      s = single_qubit_scenario(kind, hadamard_model(p), hadamard_target(), opt);
      break;
    case ScenarioKind::Gtc:
      s = single_qubit_scenario(kind, gtc_model(opt.gtc, p), gtc_target(opt.gtc), opt);
      break;
    case ScenarioKind::GtcCrosstalk:
      s = crosstalk_scenario(kind, gtc_model(opt.gtc, p), gtc_target(opt.gtc), opt);
      break;
    case ScenarioKind::RabiCrosstalk:
      s = crosstalk_scenario(kind, hadamard_model(p), hadamard_target(), opt);
      break;
    case ScenarioKind::Iswap: {
      TwoQubitModel model = iswap_model(p);
      model.validate();
      s.kind = kind;
      s.duration = model.duration;
      s.labels = two_qubit_labels();
      s.comp_variants = {two_qubit_comp_labels()};
      s.target = iswap_target();
      auto m = std::make_shared<const TwoQubitModel>(model);
      s.hamiltonian = [m](const OffsetSet& off, double t, bool leak) {
        return h_two(*m, off, t, leak);
      };
      s.collapse = two_qubit_terms(p.kappa1, p.kappa_phi);
      s.avg_points = 33;
      break;
    }
    case ScenarioKind::Stirap: {
      LadderModel model = stirap_model(p);
      model.validate();
      // Leak-free oracle pulse pair; throws if the area condition fails.
      (void)stirap_pair(model.theta, model.omega_m, model.tau);
      s.kind = kind;
      s.duration = model.tau;
      s.labels = default_labels(4);
      s.comp_variants = {{"0", "1", "2"}};
      s.transfer_from = "0";
      s.transfer_to = "2";
      auto m = std::make_shared<const LadderModel>(model);
      s.hamiltonian = [m](const OffsetSet& off, double t, bool leak) {
        return h_ladder(*m, off, t, leak);
      };
      s.collapse = single_transmon_terms(4, p.kappa1, p.kappa_phi);
      s.leak_only_measure = Measure::StateClosed;
      s.decoherent_measure = Measure::StateOpen;
      break;
    }
  }
  if (opt.drag && kind != ScenarioKind::Not && kind != ScenarioKind::Hadamard) {
    throw ConfigError("DRAG correction is available for the NOT and Hadamard gates only");
  }
  s.name = std::string(to_string(kind)) + (opt.drag ? "_drag" : "");
  s.integrator = opt.integrator;
  s.kappa1 = p.kappa1;
  s.kappa_phi = p.kappa_phi;
  return s;
}

Operator scenario_unitary(const Scenario& s, const OffsetSet& off, bool include_leak) {
  return *propagate_unitary(s.bind(off, include_leak), s.duration, s.integrator).final_unitary;
}

namespace {

int index_of(const Labels& labels, const std::string& l) {
  return label_indices({l}, labels).front();
}

double averaged_from_channel(const Scenario& s, const Channel& ch) {
  return s.is_two_qubit() ? averaged_fidelity_2q(ch, s.target, s.avg_points)
                          : averaged_fidelity_1q(ch, s.target, s.avg_points);
}

void require_gate(const Scenario& s, Measure m) {
  if (s.is_transfer()) {
    throw ConfigError(std::string("measure '") + to_string(m) +
                      "' needs a gate scenario; use a state measure");
  }
}

}  // namespace

double evaluate(const Scenario& s, const OffsetSet& off, Measure m) {
  if (!off.is_finite()) throw ConfigError("offsets must be finite");
  switch (m) {
    case Measure::Trace: {
      require_gate(s, m);
      const Operator u = scenario_unitary(s, off);
      double acc = 0.0;
      for (const auto& v : s.comp_variants) acc += trace_gate_fidelity(u, s.target, v);
      return acc / s.comp_variants.size();
    }
    case Measure::AveragedClosed: {
      require_gate(s, m);
      const Operator u = scenario_unitary(s, off);
      double acc = 0.0;
      for (const auto& v : s.comp_variants) {
        acc += averaged_from_channel(s, Channel::from_unitary(u.entries(), label_indices(v, s.labels)));
      }
      return acc / s.comp_variants.size();
    }
    case Measure::AveragedOpen: {
      require_gate(s, m);
      const Hamiltonian h = s.bind(off);
      const int dim = static_cast<int>(s.labels.size());
      double acc = 0.0;
      for (const auto& v : s.comp_variants) {
        const auto idx = label_indices(v, s.labels);
        const Channel ch = Channel::from_batch(
            [&](const std::vector<Matrix>& in) {
              return lindblad_evolve_batch(h, in, s.collapse, s.duration, s.integrator);
            },
            dim, idx);
        acc += averaged_from_channel(s, ch);
      }
      return acc / s.comp_variants.size();
    }
    case Measure::StateClosed: {
      if (!s.is_transfer()) throw ConfigError("state measures need a transfer scenario");
      const Operator u = scenario_unitary(s, off);
      return std::norm(u(index_of(s.labels, s.transfer_to), index_of(s.labels, s.transfer_from)));
    }
    case Measure::StateOpen: {
      if (!s.is_transfer()) throw ConfigError("state measures need a transfer scenario");
      const StateVector psi0 = StateVector::basis(s.labels, s.transfer_from);
      const auto res =
          lindblad_evolve(s.bind(off), DensityMatrix::pure(psi0), s.collapse, s.duration, s.integrator);
      return state_fidelity(*res.final_density, StateVector::basis(s.labels, s.transfer_to));
    }
  }
  return 0.0;
}

double final_leakage(const Scenario& s, const OffsetSet& off, bool decoherent) {
  const auto leak_idx = [&](const std::vector<std::string>& comp) {
    std::vector<int> out;
    const auto c = label_indices(comp, s.labels);
    for (int i = 0; i < static_cast<int>(s.labels.size()); ++i) {
      if (std::find(c.begin(), c.end(), i) == c.end()) out.push_back(i);
    }
    return out;
  };
  std::vector<std::pair<std::string, std::vector<std::string>>> inputs;
  if (s.is_transfer()) {
    inputs.push_back({s.transfer_from, s.comp_variants.front()});
  } else {
    for (const auto& v : s.comp_variants) {
      for (const auto& l : v) inputs.push_back({l, v});
    }
  }
  double acc = 0.0;
  if (!decoherent) {
    const Operator u = scenario_unitary(s, off);
    for (const auto& [from, comp] : inputs) {
      const int j = index_of(s.labels, from);
      for (int i : leak_idx(comp)) acc += std::norm(u(i, j));
    }
  } else {
    const Hamiltonian h = s.bind(off);
    std::vector<Matrix> rho0;
    for (const auto& in : inputs) {
      rho0.push_back(DensityMatrix::pure(StateVector::basis(s.labels, in.first)).entries());
    }
    const auto out = lindblad_evolve_batch(h, rho0, s.collapse, s.duration, s.integrator);
    for (std::size_t k = 0; k < inputs.size(); ++k) {
      for (int i : leak_idx(inputs[k].second)) acc += out[k](i, i).real();
    }
  }
  return acc / inputs.size();
}

std::vector<PopulationSample> population_trajectory(const Scenario& s, const OffsetSet& off,
                                                    bool decoherent, const std::string& initial,
                                                    int n_samples, bool include_leak) {
  const Hamiltonian h = s.bind(off, include_leak);
  IntegratorConfig cfg = s.integrator;
  const int n = resolve_steps(cfg, h, s.duration);
  cfg.n_steps = n;
  cfg.sample_stride = std::max(1, n / std::max(1, n_samples));
  const StateVector psi0 = StateVector::basis(s.labels, initial);
  std::vector<PopulationSample> out;
  if (!decoherent) {
    const auto res = propagate_unitary(h, s.duration, cfg);
    for (const auto& [t, u] : res.unitary_samples) {
      const Vector psi = u.entries() * psi0.amplitudes();
      PopulationSample p{t, {}};
      for (Eigen::Index i = 0; i < psi.size(); ++i) p.populations.push_back(std::norm(psi(i)));
      out.push_back(std::move(p));
    }
  } else {
    const auto res = lindblad_evolve(h, DensityMatrix::pure(psi0), s.collapse, s.duration, cfg);
    for (const auto& [t, rho] : res.density_samples) {
      PopulationSample p{t, {}};
      for (int i = 0; i < rho.dim(); ++i) p.populations.push_back(rho.entries()(i, i).real());
      out.push_back(std::move(p));
    }
  }
  return out;
}

}  // namespace leakctl
