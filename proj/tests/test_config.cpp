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


#include <gtest/gtest.h>

#include <cmath>

#include "rollsim/config.hpp"
#include "rollsim/sweep.hpp"

namespace rollsim
{
namespace
{

std::string error_key(const std::function<void()> & f)
{
  try {
    f();
  } catch (const ConfigError & e) {
    return e.key();
  }
  return "<no error>";
}

TEST(KeyValueFile, ParsesCommentsAndWhitespace)
{
  const auto kv = KeyValueFile::from_string("# vehicle\n  m_s = 900   # heavier\n\nk_f=15000\r\n");
  EXPECT_EQ(*kv.number("m_s"), 900.0);
  EXPECT_EQ(*kv.number("k_f"), 15000.0);
  EXPECT_FALSE(kv.number("k_r"));
  EXPECT_NO_THROW(kv.require_all_used());
}

TEST(KeyValueFile, Errors)
{
  EXPECT_THROW(KeyValueFile::from_string("just words\n"), ConfigError);
  EXPECT_EQ(error_key([] { KeyValueFile::from_string("eta = 1\neta = 2\n"); }), "eta");
  EXPECT_THROW(KeyValueFile::load("/nonexistent/rollsim.cfg"), ConfigError);
  const auto kv = KeyValueFile::from_string("enabled = maybe\nlist = 1,,2\n");
  EXPECT_EQ(error_key([&] { kv.boolean("enabled"); }), "enabled");
  EXPECT_EQ(error_key([&] { kv.numbers("list"); }), "list");
}

TEST(KeyValueFile, UnknownKeyIsNamedWithLine)
{
  const auto kv = KeyValueFile::from_string("m_s = 800\nmass_sprung = 800\n");
  load_vehicle_params(kv);
  try {
    kv.require_all_used();
    FAIL() << "expected ConfigError";
  } catch (const ConfigError & e) {
    EXPECT_EQ(e.key(), "mass_sprung");
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos);
  }
}

TEST(LoadVehicleParams, OverridesAndValidates)
{
  const VehicleParams p = load_vehicle_params(KeyValueFile::from_string("m_s = 900\nK_u = 0\n"));
  EXPECT_EQ(p.m_s, 900.0);
  EXPECT_EQ(p.K_u, 0.0);
  EXPECT_EQ(p.k_f, VehicleParams{}.k_f);
  EXPECT_EQ(error_key([] { load_vehicle_params(KeyValueFile::from_string("k_r = -5\n")); }), "k_r");
  EXPECT_EQ(error_key([] { load_vehicle_params(KeyValueFile::from_string("h_phi = abc\n")); }), "h_phi");
  EXPECT_EQ(error_key([] { load_vehicle_params(KeyValueFile::from_string("a = 3\n")); }), "a");
}

TEST(LoadControllerConfig, Fields)
{
  const ControllerConfig c = load_controller_config(
    KeyValueFile::from_string("eta = 25\npsi = 0.3\nvariant = small-angle\nenabled = false\nforce_limit = 3000\n"));
  EXPECT_EQ(c.eta, 25.0);
  EXPECT_EQ(c.psi, 0.3);
  EXPECT_EQ(c.variant, ControlVariant::small_angle);
  EXPECT_FALSE(c.enabled);
  EXPECT_EQ(c.force_limit, 3000.0);
  EXPECT_EQ(error_key([] { load_controller_config(KeyValueFile::from_string("psi = 0\n")); }), "psi");
  EXPECT_EQ(error_key([] { load_controller_config(KeyValueFile::from_string("variant = pid\n")); }), "variant");
}

TEST(LoadScenario, SlalomAndJTurn)
{
  const ScenarioSpec s = load_scenario(
    KeyValueFile::from_string("kind = slalom\nspeed_kph = 40\npreview_time = 0.6\nrecord_decimation = 5\n"));
  EXPECT_EQ(s.kind, ManeuverKind::slalom);
  EXPECT_EQ(s.driver.preview_time, 0.6);
  EXPECT_EQ(s.sim.record_decimation, 5);
  const ManeuverProfile m = build_profile(s, VehicleParams{});
  EXPECT_EQ(m.duration, 13.0);
  EXPECT_NEAR(m.x_dot, 40.0 / 3.6, 1e-15);

  const ScenarioSpec j = load_scenario(
    KeyValueFile::from_string("kind = j-turn\nspeed_kph = 80\nramp_time = 0.35\nduration = 6\n"));
  const ManeuverProfile mj = build_profile(j, VehicleParams{});
  EXPECT_EQ(mj.kind, ManeuverKind::j_turn);
  EXPECT_EQ(mj.duration, 6.0);
  EXPECT_EQ(mj.steering(1.35), jturn_target_steer(VehicleParams{}));
}

TEST(LoadScenario, BankAndSimSettings)
{
  const ScenarioSpec s = load_scenario(KeyValueFile::from_string(
    "kind = custom\nsteer_amplitude = 0\nbank_deg = 5\nbank_ramp_s = 2\nintegrator = euler\n"
    "measurement_mode = filtered\ndt = 0.0005\nt_end = 3\n"));
  EXPECT_EQ(s.sim.integrator, Integrator::euler);
  EXPECT_EQ(s.sim.measurement_mode, MeasurementMode::filtered);
  EXPECT_EQ(s.sim.dt, 0.0005);
  EXPECT_EQ(*s.sim.t_end, 3.0);
  const ManeuverProfile m = build_profile(s, VehicleParams{});
  EXPECT_NEAR(m.bank(1.0).rate, 0.0436, 5e-5);
}

TEST(LoadScenario, InvalidValuesNameTheKey)
{
  const auto key_of = [](const std::string & text) {
    return error_key([&] { load_scenario(KeyValueFile::from_string(text)); });
  };
  EXPECT_EQ(key_of("kind = fishhook\n"), "kind");
  EXPECT_EQ(key_of("speed_kph = 0\n"), "speed_kph");
  EXPECT_EQ(key_of("dt = 0.5\n"), "dt");
  EXPECT_EQ(key_of("record_decimation = 2.5\n"), "record_decimation");
  EXPECT_EQ(key_of("preview_time = -1\n"), "preview_time");
  EXPECT_EQ(key_of("integrator = midpoint\n"), "integrator");
  EXPECT_EQ(key_of("duration = 0\n"), "duration");
}

TEST(LoadSweep, GridListsAndFixedKeys)
{
  const auto kv = KeyValueFile::from_string(
    "kind = j-turn\neta = 15, 25, 30\npsi = 0.5\nspeed_kph = 60\nduration = 5\nforce_limit = 5000\n");
  const SweepSpec s = load_sweep(kv, VehicleParams{});
  EXPECT_EQ(s.grid.eta, (std::vector<double>{15.0, 25.0, 30.0}));
  EXPECT_EQ(s.grid.speed_kph, (std::vector<double>{60.0}));
  EXPECT_EQ(s.grid.preview_time, (std::vector<double>{0.4}));
  EXPECT_EQ(s.grid.size(), 3u);
  EXPECT_EQ(s.scenario.kind, ManeuverKind::j_turn);
  EXPECT_EQ(s.controller.force_limit, 5000.0);
  EXPECT_EQ(sweep_points(s.grid).size(), 3u);
}

TEST(LoadSweep, Errors)
{
  EXPECT_EQ(error_key([] { load_sweep(KeyValueFile::from_string("eta = 15, -1\n"), VehicleParams{}); }), "eta");
  EXPECT_EQ(error_key([] { load_sweep(KeyValueFile::from_string("gain = 3\n"), VehicleParams{}); }), "gain");
  EXPECT_EQ(error_key([] { load_sweep(KeyValueFile::from_string("psi = 0.5, x\n"), VehicleParams{}); }), "psi");
}

}  // namespace
}  // namespace rollsim
