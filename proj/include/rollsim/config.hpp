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

#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "rollsim/controller.hpp"
#include "rollsim/csv.hpp"
#include "rollsim/errors.hpp"
#include "rollsim/maneuvers.hpp"
#include "rollsim/sim.hpp"
#include "rollsim/vehicle_params.hpp"

namespace rollsim
{

/// Flat `key = value` configuration. `#` starts a comment. Every lookup marks the key
/// as used so callers can reject keys nobody asked for.
class KeyValueFile
{
public:
  static KeyValueFile parse(std::istream & is, std::string source = "<input>")
  {
    KeyValueFile f;
    f.source_ = std::move(source);
    std::string line;
    int number = 0;
    while (std::getline(is, line)) {
      ++number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string body = trim(line);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        throw ConfigError(f.source_ + ":" + std::to_string(number) + ": expected 'key = value'");
      }
      const std::string key = trim(body.substr(0, eq));
      const std::string value = trim(body.substr(eq + 1));
      if (key.empty()) throw ConfigError(f.source_ + ":" + std::to_string(number) + ": empty key");
      if (!f.entries_.emplace(key, Entry{value, number}).second) {
        throw ConfigError(f.source_ + ": duplicate key '" + key + "'", key);
      }
    }
    return f;
  }

  static KeyValueFile load(const std::string & path)
  {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    return parse(in, path);
  }

  static KeyValueFile from_string(const std::string & text)
  {
    std::istringstream in(text);
    return parse(in);
  }

  /// Copy without `key` (used when a key carries a list instead of a scalar).
  KeyValueFile without(const std::string & key) const
  {
    KeyValueFile f = *this;
    f.entries_.erase(key);
    return f;
  }

  bool contains(const std::string & key) const { return entries_.count(key) != 0; }

  std::optional<std::string> text(const std::string & key) const
  {
    const auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    used_.insert(key);
    return it->second.value;
  }

  std::optional<double> number(const std::string & key) const
  {
    const auto v = text(key);
    if (!v) return std::nullopt;
    return parse_double(*v, key);
  }

  std::optional<bool> boolean(const std::string & key) const
  {
    const auto v = text(key);
    if (!v) return std::nullopt;
    if (*v == "true" || *v == "1" || *v == "yes" || *v == "on") return true;
    if (*v == "false" || *v == "0" || *v == "no" || *v == "off") return false;
    throw ConfigError("invalid boolean '" + *v + "' for " + key, key);
  }

  /// Comma-separated list of numbers.
  std::optional<std::vector<double>> numbers(const std::string & key) const
  {
    const auto v = text(key);
    if (!v) return std::nullopt;
    std::vector<double> out;
    std::stringstream ss(*v);
    std::string item;
    while (std::getline(ss, item, ',')) {
      out.push_back(parse_double(item, key));
    }
    if (out.empty()) throw ConfigError("empty list for " + key, key);
    return out;
  }

  void read(const std::string & key, double & dst) const
  {
    if (const auto v = number(key)) dst = *v;
  }

  /// Throws naming the first key that no loader consumed.
  void require_all_used() const
  {
    for (const auto & [key, entry] : entries_) {
      if (!used_.count(key)) {
        throw ConfigError(
          source_ + ":" + std::to_string(entry.line) + ": unknown key '" + key + "'", key);
      }
    }
  }

  const std::string & source() const noexcept { return source_; }

private:
  struct Entry
  {
    std::string value;
    int line = 0;
  };

  static std::string trim(const std::string & s)
  {
    const auto b = s.find_first_not_of(" \t\r");
    const auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
  }

  std::string source_;
  std::map<std::string, Entry> entries_;
  mutable std::set<std::string> used_;
};

inline VehicleParams load_vehicle_params(const KeyValueFile & kv)
{
  VehicleParams p;
  kv.read("m_s", p.m_s);
  kv.read("m_u", p.m_u);
  kv.read("I_xx", p.I_xx);
  kv.read("h_phi", p.h_phi);
  kv.read("l_s", p.l_s);
  kv.read("l_w", p.l_w);
  kv.read("a", p.a);
  kv.read("l", p.l);
  kv.read("k_f", p.k_f);
  kv.read("k_r", p.k_r);
  kv.read("b_f", p.b_f);
  kv.read("b_r", p.b_r);
  kv.read("k_t", p.k_t);
  kv.read("K_u", p.K_u);
  kv.read("g", p.g);
  p.validate();
  return p;
}

inline ControllerConfig load_controller_config(const KeyValueFile & kv)
{
  ControllerConfig c;
  kv.read("eta", c.eta);
  kv.read("psi", c.psi);
  kv.read("force_limit", c.force_limit);
  if (const auto v = kv.text("variant")) c.variant = parse_variant(*v);
  if (const auto v = kv.boolean("enabled")) c.enabled = *v;
  c.validate();
  return c;
}

/// Everything a scenario file describes: the maneuver and how to simulate it.
struct ScenarioSpec
{
  ManeuverKind kind = ManeuverKind::slalom;
  double speed_kph = 30.0;
  std::optional<double> duration;
  PreviewDriver driver;
  JTurnOptions jturn;
  double steer_amplitude = 0.02;
  double steer_frequency = 0.5;
  double bank_deg = 0.0;
  double bank_ramp_s = 2.0;
  double bank_start_s = 0.0;
  SimConfig sim;
};

inline ScenarioSpec load_scenario(const KeyValueFile & kv)
{
  ScenarioSpec s;
  if (const auto v = kv.text("kind")) s.kind = parse_maneuver_kind(*v);
  kv.read("speed_kph", s.speed_kph);
  if (!(s.speed_kph > 0.0)) throw ConfigError("'speed_kph' must be > 0", "speed_kph");
  if (const auto v = kv.number("duration")) {
    if (!(*v > 0.0)) throw ConfigError("'duration' must be > 0", "duration");
    s.duration = *v;
  }
  kv.read("preview_time", s.driver.preview_time);
  kv.read("cone_spacing", s.driver.cone_spacing);
  kv.read("lateral_offset", s.driver.lateral_offset);
  kv.read("steering_gain", s.driver.steering_gain);
  kv.read("max_steer_rate", s.driver.max_steer_rate);
  kv.read("lead_in", s.driver.lead_in);
  s.driver.validate();
  kv.read("trigger_time", s.jturn.trigger_time);
  kv.read("ramp_time", s.jturn.ramp_time);
  kv.read("target_accel_g", s.jturn.target_accel_g);
  kv.read("reference_speed", s.jturn.reference_speed);
  kv.read("steer_amplitude", s.steer_amplitude);
  kv.read("steer_frequency", s.steer_frequency);
  kv.read("bank_deg", s.bank_deg);
  kv.read("bank_ramp_s", s.bank_ramp_s);
  kv.read("bank_start_s", s.bank_start_s);
  kv.read("dt", s.sim.dt);
  if (const auto v = kv.number("t_end")) s.sim.t_end = *v;
  if (const auto v = kv.text("integrator")) s.sim.integrator = parse_integrator(*v);
  if (const auto v = kv.text("measurement_mode")) s.sim.measurement_mode = parse_measurement_mode(*v);
  if (const auto v = kv.number("record_decimation")) {
    if (*v != static_cast<double>(static_cast<int>(*v))) {
      throw ConfigError("'record_decimation' must be an integer", "record_decimation");
    }
    s.sim.record_decimation = static_cast<int>(*v);
  }
  kv.read("travel_limit", s.sim.travel_limit);
  s.sim.validate();
  return s;
}

inline ManeuverProfile build_profile(const ScenarioSpec & s, const VehicleParams & p)
{
  const double v = kph_to_mps(s.speed_kph);
  ManeuverProfile m;
  switch (s.kind) {
    case ManeuverKind::slalom:
      m = slalom_profile(p, v, s.driver, s.duration.value_or(13.0));
      break;
    case ManeuverKind::j_turn: {
      JTurnOptions o = s.jturn;
      if (s.duration) o.duration = *s.duration;
      m = jturn_profile(p, v, o);
      break;
    }
    case ManeuverKind::custom:
      m = sine_steer_profile(v, s.steer_amplitude, s.steer_frequency, s.duration.value_or(10.0));
      break;
  }
  return banked_profile(std::move(m), s.bank_deg, s.bank_ramp_s, s.bank_start_s);
}

}  // namespace rollsim
