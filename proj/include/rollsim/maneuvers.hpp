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
#include <array>
#include <cmath>
#include <functional>
#include <memory>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "rollsim/controller.hpp"
#include "rollsim/errors.hpp"
#include "rollsim/vehicle_params.hpp"

namespace rollsim
{

inline constexpr double kMaxSteer = 0.6;  // road-wheel [rad]

constexpr double kph_to_mps(double kph) noexcept { return kph / 3.6; }

enum class ManeuverKind { slalom, j_turn, custom };

inline ManeuverKind parse_maneuver_kind(std::string_view s)
{
  if (s == "slalom") return ManeuverKind::slalom;
  if (s == "j-turn" || s == "jturn") return ManeuverKind::j_turn;
  if (s == "custom") return ManeuverKind::custom;
  throw ConfigError("unknown scenario kind '" + std::string(s) + "'", "kind");
}

inline std::string_view to_string(ManeuverKind k)
{
  switch (k) {
    case ManeuverKind::slalom: return "slalom";
    case ManeuverKind::j_turn: return "j-turn";
    case ManeuverKind::custom: return "custom";
  }
  return "?";
}

struct BankSample
{
  double angle = 0.0;  // [rad]
  double rate = 0.0;   // [rad/s]
};

/// Time-parameterized inputs of one test run. All members are pure functions of time.
struct ManeuverProfile
{
  ManeuverKind kind = ManeuverKind::custom;
  double x_dot = 0.0;
  double duration = 0.0;
  std::function<double(double)> steering = [](double) { return 0.0; };
  std::function<BankSample(double)> bank = [](double) { return BankSample{}; };
  std::function<std::array<double, 4>(double)> road_height = [](double) {
    return std::array<double, 4>{};
  };

  void validate() const
  {
    if (!(duration > 0.0)) throw ConfigError("maneuver duration must be > 0", "duration");
    if (!(x_dot > 0.0) || !std::isfinite(x_dot)) throw ConfigError("maneuver speed must be > 0", "speed_kph");
    if (!steering || !bank || !road_height) throw ConfigError("maneuver profile has an empty input function");
  }
};

/// Single-point preview driver for the slalom.
struct PreviewDriver
{
  double preview_time = 0.4;     // [s]
  double cone_spacing = 15.24;   // [m]
  double lateral_offset = 1.1;   // gate offset from the centerline [m]
  double steering_gain = 0.25;   // [rad/m]
  double max_steer_rate = 8.0;   // road wheel [rad/s]
  double lead_in = 15.24;        // straight approach before the course [m]

  void validate() const
  {
    if (!(preview_time > 0.0)) throw ConfigError("driver 'preview_time' must be > 0", "preview_time");
    if (!(cone_spacing > 0.0)) throw ConfigError("driver 'cone_spacing' must be > 0", "cone_spacing");
    if (!(lateral_offset >= 0.0)) throw ConfigError("driver 'lateral_offset' must be >= 0", "lateral_offset");
    if (!(steering_gain >= 0.0)) throw ConfigError("driver 'steering_gain' must be >= 0", "steering_gain");
    if (!(max_steer_rate > 0.0)) throw ConfigError("driver 'max_steer_rate' must be > 0", "max_steer_rate");
    if (!(lead_in >= 0.0)) throw ConfigError("driver 'lead_in' must be >= 0", "lead_in");
  }
};

/// Lateral offset of the slalom reference path at longitudinal position x. The path
/// runs straight to the lead-in point, then joins gates of alternating sign with
/// straight segments.
inline double slalom_reference(const PreviewDriver & d, double x)
{
  const double u = x - d.lead_in;
  if (u <= 0.0) {
    return 0.0;
  }
  const double gates = u / d.cone_spacing;
  const auto k = static_cast<long>(std::floor(gates));
  const double frac = gates - static_cast<double>(k);
  const auto gate = [&](long n) {
    return n < 0 ? 0.0 : (n % 2 == 0 ? d.lateral_offset : -d.lateral_offset);
  };
  const double from = gate(k - 1);
  const double to = gate(k);
  return from + (to - from) * frac;
}

namespace detail
{

/// Uniformly sampled signal, linearly interpolated, held constant outside the table.
class SampledSignal
{
public:
  SampledSignal(double step, std::vector<double> values) : step_(step), values_(std::move(values)) {}

  double operator()(double t) const
  {
    if (values_.empty() || t <= 0.0) {
      return values_.empty() ? 0.0 : values_.front();
    }
    const double pos = t / step_;
    const auto i = static_cast<std::size_t>(pos);
    if (i + 1 >= values_.size()) {
      return values_.back();
    }
    const double w = pos - static_cast<double>(i);
    return values_[i] + w * (values_[i + 1] - values_[i]);
  }

private:
  double step_;
  std::vector<double> values_;
};

}  // namespace detail

/// Steering step used to pre-compute the driver's closed loop [s].
inline constexpr double kDriverStep = 1e-3;

/// Slalom through cones at constant speed. The driver steers toward the reference
/// point `x_dot * T_p` ahead, comparing it with the predicted lateral position
/// y + T_p * y', where y is integrated from the same steady-state a_y relation the
/// controller uses.
inline ManeuverProfile slalom_profile(
  const VehicleParams & p, double x_dot, const PreviewDriver & driver, double duration = 13.0)
{
  if (!(x_dot > 0.0)) throw ConfigError("slalom speed must be > 0", "speed_kph");
  driver.validate();

  const auto n = static_cast<std::size_t>(std::ceil(duration / kDriverStep)) + 2;
  std::vector<double> delta(n);
  const double tp = driver.preview_time;
  const double max_change = driver.max_steer_rate * kDriverStep;
  double y = 0.0;
  double y_dot = 0.0;
  double d = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * kDriverStep;
    const double target = slalom_reference(driver, x_dot * (t + tp));
    const double command = driver.steering_gain * (target - (y + tp * y_dot));
    d += std::clamp(command - d, -max_change, max_change);
    d = std::clamp(d, -kMaxSteer, kMaxSteer);
    delta[k] = d;
    y_dot += steering_lateral_accel(p, d, x_dot) * kDriverStep;
    y += y_dot * kDriverStep;
  }

  ManeuverProfile m;
  m.kind = ManeuverKind::slalom;
  m.x_dot = x_dot;
  m.duration = duration;
  m.steering = [sig = std::make_shared<const detail::SampledSignal>(kDriverStep, std::move(delta))](
                 double t) { return (*sig)(t); };
  return m;
}

struct JTurnOptions
{
  double trigger_time = 1.0;        // [s]
  double ramp_time = 0.25;          // [s]
  double duration = 14.0;           // [s]
  double target_accel_g = 0.3;      // steady-state a_y at the reference speed [g]
  double reference_speed = 22.35;   // 50 mph [m/s]
};

/// Road-wheel angle giving `target_accel_g` at `reference_speed`.
inline double jturn_target_steer(const VehicleParams & p, const JTurnOptions & o = {})
{
  const double v2 = o.reference_speed * o.reference_speed;
  return o.target_accel_g * p.g * (p.l_w + p.K_u * p.m_s * v2) / v2;
}

/// Ramp-steer avoidance maneuver: coast straight, ramp to the target angle, hold.
inline ManeuverProfile jturn_profile(const VehicleParams & p, double x_dot, const JTurnOptions & o = {})
{
  if (!(x_dot > 0.0)) throw ConfigError("j-turn speed must be > 0", "speed_kph");
  if (!(o.ramp_time > 0.0)) throw ConfigError("j-turn 'ramp_time' must be > 0", "ramp_time");
  const double target = std::clamp(jturn_target_steer(p, o), -kMaxSteer, kMaxSteer);
  ManeuverProfile m;
  m.kind = ManeuverKind::j_turn;
  m.x_dot = x_dot;
  m.duration = o.duration;
  m.steering = [target, o](double t) {
    if (t < o.trigger_time) return 0.0;
    if (t >= o.trigger_time + o.ramp_time) return target;
    return target * (t - o.trigger_time) / o.ramp_time;
  };
  return m;
}

/// Sinusoidal steering at constant speed.
inline ManeuverProfile sine_steer_profile(double x_dot, double amplitude, double frequency, double duration)
{
  if (!(std::abs(amplitude) <= kMaxSteer)) throw ConfigError("steering amplitude exceeds 0.6 rad", "steer_amplitude");
  ManeuverProfile m;
  m.kind = ManeuverKind::custom;
  m.x_dot = x_dot;
  m.duration = duration;
  m.steering = [amplitude, frequency](double t) {
    return amplitude * std::sin(2.0 * std::numbers::pi * frequency * t);
  };
  return m;
}

/// Adds a road bank ramping linearly from 0 to `bank_deg` over `ramp_s`, starting at
/// `start_s`, on top of `base`.
inline ManeuverProfile banked_profile(ManeuverProfile base, double bank_deg, double ramp_s, double start_s = 0.0)
{
  if (bank_deg == 0.0) {
    return base;
  }
  if (!(ramp_s > 0.0)) throw ConfigError("bank ramp must be > 0", "bank_ramp_s");
  const double bank = bank_deg * std::numbers::pi / 180.0;
  base.bank = [inner = base.bank, bank, ramp_s, start_s](double t) {
    BankSample b = inner(t);
    if (t >= start_s + ramp_s) {
      b.angle += bank;
    } else if (t > start_s) {
      b.angle += bank * (t - start_s) / ramp_s;
      b.rate += bank / ramp_s;
    }
    return b;
  };
  return base;
}

}  // namespace rollsim
