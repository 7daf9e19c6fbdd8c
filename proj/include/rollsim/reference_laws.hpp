// Copyright 2026 The rollsim Authors
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

#pragma once

#include "rollsim/controller.hpp"
#include "rollsim/roll_state.hpp"
#include "rollsim/vehicle_params.hpp"

// Reference control laws used to check the shipped controller's properties.

namespace rollsim::reference
{

/// Sliding law before the unsprung coupling terms are dropped. On the vehicle model
/// with a_y_meas equal to the plant's lateral acceleration it enforces s' = -eta s exactly.
inline double control_law_exact(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in, const RollState & x)
{
  const double ls = p.l_s;
  const auto & zu = x.z_u;
  const auto & zud = x.z_u_dot;
  const double coupling = 0.5 * p.k_f * ls * (zu[0] - zu[1]) + 0.5 * p.b_f * ls * (zud[0] - zud[1]) +
                          0.5 * p.k_r * ls * (zu[2] - zu[3]) + 0.5 * p.b_r * ls * (zud[2] - zud[3]);
  return control_law_full(p, cfg, in) + coupling;
}

/// Banked-surface law that enforces s' = -eta s exactly for s = phi - phi_road + psi phi_dot
/// on the vehicle model, with the bank entering only through the road heights.
inline double control_law_banked_exact(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in, const RollState & x)
{
  const double I = p.effective_roll_inertia();
  return control_law_exact(p, cfg, in, x) + I * (cfg.eta / cfg.psi) * in.phi_road + I / cfg.psi * in.phi_road_dot;
}

/// The unsprung coupling moment dropped by the shipped laws, as an absolute bound.
inline double dropped_coupling_bound(const VehicleParams & p, const RollState & x)
{
  const double ls = p.l_s;
  const auto & zu = x.z_u;
  const auto & zud = x.z_u_dot;
  return 0.5 * p.k_f * ls * std::abs(zu[0] - zu[1]) + 0.5 * p.b_f * ls * std::abs(zud[0] - zud[1]) +
         0.5 * p.k_r * ls * std::abs(zu[2] - zu[3]) + 0.5 * p.b_r * ls * std::abs(zud[2] - zud[3]);
}

}  // namespace rollsim::reference
