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

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rollsim/controller.hpp"
#include "rollsim/integrator.hpp"
#include "rollsim/maneuvers.hpp"
#include "rollsim/vehicle_model.hpp"

namespace rollsim
{

struct SimConfig
{
  double dt = 1e-3;
  std::optional<double> t_end;  // defaults to the maneuver duration
  Integrator integrator = Integrator::rk4;
  MeasurementMode measurement_mode = MeasurementMode::perfect;
  int record_decimation = 1;
  double travel_limit = 0.1;  // [m]
  bool stop_on_travel_violation = false;

  void validate() const
  {
    if (!(dt > 0.0) || dt > 0.01) throw ConfigError("'dt' must be in (0, 0.01]", "dt");
    if (t_end && !(*t_end > 0.0)) throw ConfigError("'t_end' must be > 0", "t_end");
    if (record_decimation < 1) throw ConfigError("'record_decimation' must be >= 1", "record_decimation");
    if (!(travel_limit > 0.0)) throw ConfigError("'travel_limit' must be > 0", "travel_limit");
  }
};

enum class Termination { completed, rollover, blowup, travel_violation };

inline std::string_view to_string(Termination t)
{
  switch (t) {
    case Termination::completed: return "completed";
    case Termination::rollover: return "rollover";
    case Termination::blowup: return "blowup";
    case Termination::travel_violation: return "travel-violation";
  }
  return "?";
}

namespace flags
{
inline constexpr std::uint32_t kSaturated = 1u;
inline constexpr std::uint32_t kTravelViolation = 2u;
}  // namespace flags

struct Sample
{
  double t = 0.0;
  RollState x;
  double u_phi = 0.0;
  double s = 0.0;
  CornerForces forces;
  double a_y = 0.0;  // controller's lateral acceleration estimate
  double delta = 0.0;
  std::uint32_t flags = 0;

  friend bool operator==(const Sample &, const Sample &) = default;
};

struct SimResult
{
  std::vector<Sample> samples;
  Termination termination = Termination::completed;
  std::size_t saturation_steps = 0;
  std::size_t travel_violation_steps = 0;
  double max_travel = 0.0;
  std::string message;

  friend bool operator==(const SimResult &, const SimResult &) = default;
};

/// Plant-side road input at time t. A road bank tilts the corner road heights by
/// the same geometry the sprung corners follow in roll.
inline RoadInput road_input_at(const VehicleParams & p, const ManeuverProfile & m, double t)
{
  RoadInput r;
  const BankSample bank = m.bank(t);
  r.z_road = m.road_height(t);
  for (Corner c : kCorners) {
    r.z_road[index(c)] += side_sign(c) * 0.5 * p.l_s * std::sin(bank.angle);
  }
  r.phi_road = bank.angle;
  r.phi_road_dot = bank.rate;
  r.a_y_true = steering_lateral_accel(p, m.steering(t), m.x_dot);
  return r;
}

/// Fixed-step closed-loop simulation. The controller is sampled at the start of each
/// step and held over it.
inline SimResult run(
  const VehicleParams & params, const SimConfig & sim, const ControllerConfig & ctrl,
  const ManeuverProfile & profile, RollLaw law = {})
{
  sim.validate();
  ctrl.validate();
  profile.validate();
  RollController controller(params, ctrl, sim.measurement_mode, std::move(law));

  const double t_end = sim.t_end.value_or(profile.duration);
  const auto steps = static_cast<std::size_t>(std::llround(t_end / sim.dt));
  const auto decimation = static_cast<std::size_t>(sim.record_decimation);

  SimResult result;
  result.samples.reserve(steps / decimation + 2);
  RollState x;

  const auto derivative = [&](const CornerForces & f) {
    return [&params, &profile, f](double t, const RollState & s) {
      return state_derivative(params, s, road_input_at(params, profile, t), f);
    };
  };

  for (std::size_t k = 0;; ++k) {
    const double t = static_cast<double>(k) * sim.dt;
    const RoadInput road = road_input_at(params, profile, t);
    const double delta = profile.steering(t);

    Sample sample;
    sample.t = t;
    sample.x = x;
    sample.delta = delta;
    try {
      const ControllerInputs in{
        x.phi, x.phi_dot, delta, profile.x_dot, road.phi_road, road.phi_road_dot, road.a_y_true};
      const ControllerOutput out = controller.update(in, sim.dt, x);
      sample.u_phi = out.u_phi;
      sample.s = out.s;
      sample.a_y = out.a_y_estimate;
      sample.forces = out.allocation.forces;
      if (out.allocation.any_saturated()) {
        sample.flags |= flags::kSaturated;
        ++result.saturation_steps;
      }
    } catch (const InputError & e) {
      result.termination = Termination::blowup;
      result.message = e.what();
      result.samples.push_back(sample);
      return result;
    }

    const double travel = max_suspension_travel(params, x);
    result.max_travel = std::max(result.max_travel, travel);
    if (travel > sim.travel_limit) {
      sample.flags |= flags::kTravelViolation;
      ++result.travel_violation_steps;
    }

    const bool last = k >= steps;
    if (last || k % decimation == 0) {
      result.samples.push_back(sample);
    }
    if (last) {
      break;
    }
    if ((sample.flags & flags::kTravelViolation) && sim.stop_on_travel_violation) {
      if (result.samples.back().t != t) result.samples.push_back(sample);
      result.termination = Termination::travel_violation;
      result.message = "suspension travel exceeded " + std::to_string(sim.travel_limit) + " m";
      return result;
    }

    try {
      x = integrate_step(sim.integrator, x, t, sim.dt, derivative(sample.forces));
    } catch (const ModelBlowup & e) {
      result.termination = Termination::blowup;
      result.message = e.what();
      return result;
    }
    if (!x.all_finite()) {
      result.termination = Termination::blowup;
      result.message = "non-finite state at t=" + std::to_string(t + sim.dt);
      return result;
    }
    if (std::abs(x.phi) >= std::numbers::pi / 2.0) {
      Sample s;
      s.t = static_cast<double>(k + 1) * sim.dt;
      s.x = x;
      s.delta = profile.steering(s.t);
      result.samples.push_back(s);
      result.termination = Termination::rollover;
      result.message = "roll angle reached pi/2";
      return result;
    }
  }
  return result;
}

struct RunPair
{
  SimResult passive;
  SimResult active;
};

/// Same scenario with the controller disabled and enabled.
inline RunPair run_pair(
  const VehicleParams & params, const SimConfig & sim, const ControllerConfig & ctrl,
  const ManeuverProfile & profile)
{
  ControllerConfig off = ctrl;
  off.enabled = false;
  ControllerConfig on = ctrl;
  on.enabled = true;
  return {run(params, sim, off, profile), run(params, sim, on, profile)};
}

}  // namespace rollsim
