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

#include "leakctl/framework.hpp"

#include <algorithm>

namespace leakctl {

Operator error_propagator(const Hamiltonian& h_all, const Hamiltonian& h_targ, double total_time,
                          const IntegratorConfig& cfg) {
  // Both runs share one grid so that step errors cancel in the product.
  IntegratorConfig c = cfg;
  c.n_steps = resolve_steps(cfg, h_all, total_time);
  const Operator u_all = *propagate_unitary(h_all, total_time, c).final_unitary;
  const Operator u_targ = *propagate_unitary(h_targ, total_time, c).final_unitary;
  return dagger(u_targ) * u_all;
}

Operator error_propagator(const SingleQubitModel& m, const OffsetSet& off,
                          const IntegratorConfig& cfg) {
  return error_propagator([&](double t) { return h_single(m, off, t, true); },
                          [&](double t) { return h_single(m, off, t, false); }, m.duration, cfg);
}

double error_identity_defect(const Operator& u_err, const std::vector<std::string>& comp_labels) {
  const auto idx = label_indices(comp_labels, u_err.labels());
  const Matrix block = restrict(u_err.entries(), idx);
  return (block - Matrix::Identity(block.rows(), block.cols())).norm();
}

MagnusReport magnus_residual(const Hamiltonian& h_leak, double total_time, const Operator& a,
                             int n_seg, const std::vector<std::string>& comp_labels) {
  if (n_seg < 1 || n_seg > 64) throw ConfigError("magnus_residual: n_seg must be in [1, 64]");
  MagnusReport r;
  r.n_seg = n_seg;
  r.residuals = first_order_residuals(h_leak, total_time, a, n_seg, comp_labels, 2000);
  r.max_residual = *std::max_element(r.residuals.begin(), r.residuals.end());
  return r;
}

MagnusReport magnus_residual(const SingleQubitModel& m, const Operator& a, int n_seg,
                             const OffsetSet& off) {
  return magnus_residual(single_qubit_leak(m, off), m.duration, a, n_seg, {"0", "1"});
}

}  // namespace leakctl
