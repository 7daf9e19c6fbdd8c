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
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "rollsim/allocation.hpp"
#include "rollsim/errors.hpp"
#include "rollsim/estimator.hpp"
#include "rollsim/roll_state.hpp"
#include "rollsim/vehicle_params.hpp"

namespace rollsim
{

enum class ControlVariant { full, implemented_steering, banked, small_angle };

inline ControlVariant parse_variant(std::string_view s)
{
  if (s == "full") return ControlVariant::full;
  if (s == "implemented-steering") return ControlVariant::implemented_steering;
  if (s == "banked") return ControlVariant::banked;
  if (s == "small-angle") return ControlVariant::small_angle;
  throw ConfigError("unknown controller variant '" + std::string(s) + "'", "variant");
}

inline std::string_view to_string(ControlVariant v)
{
  switch (v) {
    case ControlVariant::full: return "full";
    case ControlVariant::implemented_steering: return "implemented-steering";
    case ControlVariant::banked: return "banked";
    case ControlVariant::small_angle: return "small-angle";
  }
  return "?";
}

struct ControllerConfig
{
  double eta = 15.0;  // sliding gain [1/s]
  double psi = 0.5;   // comfort weight [s]
  ControlVariant variant = ControlVariant::implemented_steering;
  double force_limit = 4000.0;  // per corner [N]
  bool enabled = true;

  void validate() const
  {
    if (!std::isfinite(eta) || eta <= 0.0) throw ConfigError("controller 'eta' must be > 0", "eta");
    if (!std::isfinite(psi) || psi <= 0.0) throw ConfigError("controller 'psi' must be > 0", "psi");
    if (!(force_limit > 0.0)) throw ConfigError("controller 'force_limit' must be > 0", "force_limit");
  }
};

struct ControllerInputs
{
  double phi = 0.0;
  double phi_dot = 0.0;
  double delta_front = 0.0;  // road-wheel steering angle [rad]
  double x_dot = 0.0;        // longitudinal speed [m/s]
  double phi_road = 0.0;
  double phi_road_dot = 0.0;
  double a_y_meas = 0.0;  // only read by the full variant

  void validate() const
  {
    const double v[] = {phi, phi_dot, delta_front, x_dot, phi_road, phi_road_dot, a_y_meas};
    for (double x : v) {
      if (!std::isfinite(x)) throw InputError("non-finite controller input");
    }
    if (x_dot < 0.0) throw InputError("controller input x_dot must be >= 0");
  }
};

/// s = (phi - phi_road) + psi * phi_dot.
inline double sliding_surface(double phi, double phi_dot, double psi, double phi_road = 0.0)
{
  return (phi - phi_road) + psi * phi_dot;
}

/// Steady-state lateral acceleration from road-wheel steering angle and speed.
inline double steering_lateral_accel(const VehicleParams & p, double delta_front, double x_dot)
{
  const double v2 = x_dot * x_dot;
  return delta_front * v2 / (p.l_w + p.K_u * p.m_s * v2);
}

namespace detail
{

inline void check_gains(const ControllerConfig & cfg)
{
  if (!(cfg.eta > 0.0) || !(cfg.psi > 0.0)) throw InputError("eta and psi must be > 0");
}

// Reaching-law terms plus cancellation of the roll stiffness/damping and gravity moments,
// with the sin/cos factors passed in so the small-angle variant can share it.
inline double sliding_law(
  const VehicleParams & p, const ControllerConfig & cfg, double phi, double phi_dot, double a_y,
  double sin_phi, double cos_phi)
{
  const double I = p.effective_roll_inertia();
  const double ls2 = p.l_s * p.l_s;
  return -I * (cfg.eta / cfg.psi) * phi - I * (cfg.eta + 1.0 / cfg.psi) * phi_dot -
         p.m_s * a_y * p.h_phi * cos_phi - p.m_s * p.g * p.h_phi * sin_phi +
         0.5 * p.k_f * ls2 * sin_phi + 0.5 * p.b_f * ls2 * phi_dot * cos_phi +
         0.5 * p.k_r * ls2 * sin_phi + 0.5 * p.b_r * ls2 * phi_dot * cos_phi;
}

}  // namespace detail

/// Sliding-mode roll moment using a measured lateral acceleration.
inline double control_law_full(const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  detail::check_gains(cfg);
  in.validate();
  return detail::sliding_law(
    p, cfg, in.phi, in.phi_dot, in.a_y_meas, std::sin(in.phi), std::cos(in.phi));
}

/// As control_law_full with a_y replaced by the steering-derived estimate.
inline double control_law_implemented(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  detail::check_gains(cfg);
  in.validate();
  const double a_y = steering_lateral_accel(p, in.delta_front, in.x_dot);
  return detail::sliding_law(p, cfg, in.phi, in.phi_dot, a_y, std::sin(in.phi), std::cos(in.phi));
}

/// Implemented law with sin(phi) -> phi and cos(phi) -> 1.
inline double control_law_small_angle(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  detail::check_gains(cfg);
  in.validate();
  const double a_y = steering_lateral_accel(p, in.delta_front, in.x_dot);
  return detail::sliding_law(p, cfg, in.phi, in.phi_dot, a_y, in.phi, 1.0);
}

/// Road-bank compensated law: the surface is measured from phi_road and the lateral
/// acceleration is reduced by g sin(phi_road).
inline double control_law_banked(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  detail::check_gains(cfg);
  in.validate();
  const double I = p.effective_roll_inertia();
  const double ls2 = p.l_s * p.l_s;
  const double s = std::sin(in.phi);
  const double c = std::cos(in.phi);
  const double a_y_tilde =
    steering_lateral_accel(p, in.delta_front, in.x_dot) - p.g * std::sin(in.phi_road);
  return -I * (cfg.eta / cfg.psi) * (in.phi - in.phi_road) -
         I * (cfg.eta + 1.0 / cfg.psi) * in.phi_dot - I * (1.0 / cfg.psi) * in.phi_road_dot -
         p.m_s * a_y_tilde * p.h_phi * c - p.m_s * p.g * p.h_phi * std::sin(in.phi - in.phi_road) +
         0.5 * p.k_f * ls2 * s + 0.5 * p.b_f * ls2 * in.phi_dot * c + 0.5 * p.k_r * ls2 * s +
         0.5 * p.b_r * ls2 * in.phi_dot * c;
}

inline double control_law(const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  switch (cfg.variant) {
    case ControlVariant::full: return control_law_full(p, cfg, in);
    case ControlVariant::implemented_steering: return control_law_implemented(p, cfg, in);
    case ControlVariant::banked: return control_law_banked(p, cfg, in);
    case ControlVariant::small_angle: return control_law_small_angle(p, cfg, in);
  }
  throw InputError("unknown control variant");
}

/// Lateral acceleration the selected variant feeds forward (telemetry).
inline double lateral_accel_estimate(
  const VehicleParams & p, const ControllerConfig & cfg, const ControllerInputs & in)
{
  switch (cfg.variant) {
    case ControlVariant::full: return in.a_y_meas;
    case ControlVariant::banked:
      return steering_lateral_accel(p, in.delta_front, in.x_dot) - p.g * std::sin(in.phi_road);
    default: return steering_lateral_accel(p, in.delta_front, in.x_dot);
  }
}

enum class MeasurementMode { perfect, filtered };

inline MeasurementMode parse_measurement_mode(std::string_view s)
{
  if (s == "perfect") return MeasurementMode::perfect;
  if (s == "filtered") return MeasurementMode::filtered;
  throw ConfigError("unknown measurement_mode '" + std::string(s) + "'", "measurement_mode");
}

inline std::string_view to_string(MeasurementMode m) { return m == MeasurementMode::perfect ? "perfect" : "filtered"; }

struct ControllerOutput
{
  double u_phi = 0.0;
  double s = 0.0;
  double a_y_estimate = 0.0;
  double phi_used = 0.0;
  AllocationResult allocation;
};

/// Replacement roll-moment law; receives the true plant state as well as the
/// controller's measured inputs.
using RollLaw = std::function<double(
  const VehicleParams &, const ControllerConfig &, const ControllerInputs &, const RollState &)>;

/// Sliding-mode roll controller with allocation to the four corners. Only the
/// roll-angle estimator carries state between updates.
class RollController
{
public:
  RollController(
    const VehicleParams & params, ControllerConfig cfg,
    MeasurementMode mode = MeasurementMode::perfect, RollLaw law = {})
  : params_(params), cfg_(cfg), mode_(mode), allocator_(params), law_(std::move(law))
  {
    cfg_.validate();
  }

  const ControllerConfig & config() const noexcept { return cfg_; }

  /// `in.phi` is the raw tilt reading; in filtered mode it only feeds the estimator.
  ControllerOutput update(ControllerInputs in, double dt, const RollState & truth)
  {
    if (mode_ == MeasurementMode::filtered) {
      in.phi = estimator_.update(in.phi_dot, dt, in.phi);
    }
    ControllerOutput out;
    out.phi_used = in.phi;
    out.s = sliding_surface(
      in.phi, in.phi_dot, cfg_.psi, cfg_.variant == ControlVariant::banked ? in.phi_road : 0.0);
    out.a_y_estimate = lateral_accel_estimate(params_, cfg_, in);
    if (!cfg_.enabled) {
      return out;
    }
    out.u_phi = law_ ? law_(params_, cfg_, in, truth) : control_law(params_, cfg_, in);
    // heave and pitch commands are not controlled
    out.allocation = allocator_.allocate(0.0, 0.0, out.u_phi, cfg_.force_limit);
    return out;
  }

private:
  VehicleParams params_;
  ControllerConfig cfg_;
  MeasurementMode mode_;
  ForceAllocator allocator_;
  RollLaw law_;
  RollAngleEstimator estimator_;
};

}  // namespace rollsim
