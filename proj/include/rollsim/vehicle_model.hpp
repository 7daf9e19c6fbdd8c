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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rollsim/roll_state.hpp"
#include "rollsim/vehicle_params.hpp"

namespace rollsim
{

/// The state derivative evaluated to a non-finite value.
class ModelBlowup : public std::runtime_error
{
public:
  ModelBlowup(const std::string & what, const RollState & state)
  : std::runtime_error(describe(what, state)), state_(state)
  {
  }

  const RollState & state() const noexcept { return state_; }

private:
  static std::string describe(const std::string & what, const RollState & x)
  {
    std::ostringstream os;
    os << what << " (phi=" << x.phi << ", phi_dot=" << x.phi_dot << ", z_s=" << x.z_s
       << ", z_s_dot=" << x.z_s_dot << ")";
    return os.str();
  }

  RollState state_;
};

namespace detail
{

inline double axle_stiffness(const VehicleParams & p, Corner c) { return is_front(c) ? p.k_f : p.k_r; }
inline double axle_damping(const VehicleParams & p, Corner c) { return is_front(c) ? p.b_f : p.b_r; }

}  // namespace detail

/// Suspension force at one corner (spring + damper), positive when it pulls the
/// unsprung mass up and the sprung corner down.
inline double suspension_force(const VehicleParams & p, const RollState & x, Corner c)
{
  const std::size_t i = index(c);
  const double half = 0.5 * p.l_s * side_sign(c);
  const double stretch = x.z_s - x.z_u[i] + half * std::sin(x.phi);
  const double stretch_rate = x.z_s_dot - x.z_u_dot[i] + half * x.phi_dot * std::cos(x.phi);
  return detail::axle_stiffness(p, c) * stretch + detail::axle_damping(p, c) * stretch_rate;
}

/// Relative displacement between sprung corner and unsprung mass [m].
inline double suspension_travel(const VehicleParams & p, const RollState & x, Corner c)
{
  return x.z_s + side_sign(c) * 0.5 * p.l_s * std::sin(x.phi) - x.z_u[index(c)];
}

inline double max_suspension_travel(const VehicleParams & p, const RollState & x)
{
  double m = 0.0;
  for (Corner c : kCorners) {
    m = std::max(m, std::abs(suspension_travel(p, x, c)));
  }
  return m;
}

/// Sprung-mass roll acceleration with control roll moment `u_phi` [N m].
inline double roll_acceleration(
  const VehicleParams & p, const RollState & x, const RoadInput & road, double u_phi)
{
  const double s = std::sin(x.phi);
  const double c = std::cos(x.phi);
  const double ls = p.l_s;
  const auto & zu = x.z_u;
  const auto & zud = x.z_u_dot;

  const double moment = p.m_s * road.a_y_true * p.h_phi * c + p.m_s * p.g * p.h_phi * s -
                        0.5 * (p.k_f + p.k_r) * ls * ls * s -
                        0.5 * (p.b_f + p.b_r) * ls * ls * x.phi_dot * c -
                        0.5 * p.k_f * ls * (zu[0] - zu[1]) - 0.5 * p.b_f * ls * (zud[0] - zud[1]) -
                        0.5 * p.k_r * ls * (zu[2] - zu[3]) - 0.5 * p.b_r * ls * (zud[2] - zud[3]) +
                        u_phi;
  const double acc = moment / p.effective_roll_inertia();
  if (!std::isfinite(acc)) {
    throw ModelBlowup("non-finite roll acceleration", x);
  }
  return acc;
}

/// Quarter-car vertical acceleration of one unsprung mass. `f_corner` is the actuator
/// command for that corner; it reacts on the unsprung mass with the same sign.
inline double unsprung_acceleration(
  const VehicleParams & p, const RollState & x, const RoadInput & road, Corner corner, double f_corner)
{
  if (index(corner) > 3) {
    throw InputError("invalid corner id " + std::to_string(index(corner)));
  }
  const std::size_t i = index(corner);
  const double tire = p.k_t * (x.z_u[i] - road.z_road[i]);
  const double acc = (suspension_force(p, x, corner) - tire + f_corner) / p.m_u;
  if (!std::isfinite(acc)) {
    throw ModelBlowup("non-finite unsprung acceleration", x);
  }
  return acc;
}

/// Sprung heave acceleration. `f_total` is the summed actuator force pressing the body
/// down, i.e. F_fl + F_fr + F_rl + F_rr.
inline double heave_acceleration(const VehicleParams & p, const RollState & x, double f_total)
{
  double suspension = 0.0;
  for (Corner c : kCorners) {
    suspension += suspension_force(p, x, c);
  }
  const double acc = (-suspension - f_total) / p.m_s;
  if (!std::isfinite(acc)) {
    throw ModelBlowup("non-finite heave acceleration", x);
  }
  return acc;
}

/// Roll moment of a corner force set, (l_s/2)(F_fl - F_fr + F_rl - F_rr).
inline double roll_moment(const VehicleParams & p, const CornerForces & f)
{
  return 0.5 * p.l_s * (f.values[0] - f.values[1] + f.values[2] - f.values[3]);
}

inline RollStateDerivative state_derivative(
  const VehicleParams & p, const RollState & x, const RoadInput & road, const CornerForces & forces)
{
  RollStateDerivative d;
  d.phi = x.phi_dot;
  d.phi_dot = roll_acceleration(p, x, road, roll_moment(p, forces));
  d.z_s = x.z_s_dot;
  d.z_s_dot = heave_acceleration(p, x, forces.sum());
  for (Corner c : kCorners) {
    const std::size_t i = index(c);
    d.z_u[i] = x.z_u_dot[i];
    d.z_u_dot[i] = unsprung_acceleration(p, x, road, c, forces[c]);
  }
  return d;
}

}  // namespace rollsim
