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
#include <cstddef>
#include <future>
#include <optional>
#include <thread>
#include <vector>

#include "rollsim/config.hpp"
#include "rollsim/metrics.hpp"
#include "rollsim/sim.hpp"

namespace rollsim
{

struct SweepGrid
{
  std::vector<double> eta{15.0};
  std::vector<double> psi{0.5};
  std::vector<double> speed_kph{30.0};
  std::vector<double> preview_time{0.4};

  std::size_t size() const { return eta.size() * psi.size() * speed_kph.size() * preview_time.size(); }
};

struct SweepPoint
{
  double eta = 0.0;
  double psi = 0.0;
  double speed_kph = 0.0;
  double preview_time = 0.0;

  friend bool operator==(const SweepPoint &, const SweepPoint &) = default;
};

struct SweepRow
{
  SweepPoint point;
  ReductionReport report;
  std::optional<double> response_delay;
  Termination passive_termination = Termination::completed;
  Termination active_termination = Termination::completed;
  std::size_t active_saturation_steps = 0;

  friend bool operator==(const SweepRow &, const SweepRow &) = default;
};

/// Grid points in Cartesian order (eta slowest, preview_time fastest).
inline std::vector<SweepPoint> sweep_points(const SweepGrid & g)
{
  std::vector<SweepPoint> pts;
  pts.reserve(g.size());
  for (double eta : g.eta)
    for (double psi : g.psi)
      for (double v : g.speed_kph)
        for (double tp : g.preview_time) pts.push_back({eta, psi, v, tp});
  return pts;
}

inline SweepRow evaluate_point(
  const VehicleParams & params, const ScenarioSpec & base, const ControllerConfig & ctrl, const SweepPoint & pt)
{
  ScenarioSpec sc = base;
  sc.speed_kph = pt.speed_kph;
  sc.driver.preview_time = pt.preview_time;
  ControllerConfig c = ctrl;
  c.eta = pt.eta;
  c.psi = pt.psi;
  const RunPair pair = run_pair(params, sc.sim, c, build_profile(sc, params));
  SweepRow row;
  row.point = pt;
  row.report = reduction_metrics(pair.passive, pair.active);
  row.response_delay = response_delay(pair.passive, pair.active);
  row.passive_termination = pair.passive.termination;
  row.active_termination = pair.active.termination;
  row.active_saturation_steps = pair.active.saturation_steps;
  return row;
}

/// Runs every grid point (in parallel when `threads` > 1). Rows are returned in grid
/// order regardless of completion order.
inline std::vector<SweepRow> sweep(
  const VehicleParams & params, const ScenarioSpec & base, const ControllerConfig & ctrl,
  const SweepGrid & grid, unsigned threads = std::max(1u, std::thread::hardware_concurrency()))
{
  const std::vector<SweepPoint> pts = sweep_points(grid);
  std::vector<SweepRow> rows(pts.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < pts.size(); ++i) rows[i] = evaluate_point(params, base, ctrl, pts[i]);
    return rows;
  }
  for (std::size_t start = 0; start < pts.size(); start += threads) {
    const std::size_t stop = std::min(pts.size(), start + threads);
    std::vector<std::future<SweepRow>> jobs;
    for (std::size_t i = start; i < stop; ++i) {
      jobs.push_back(std::async(std::launch::async, evaluate_point, std::cref(params), std::cref(base),
                                std::cref(ctrl), pts[i]));
    }
    for (std::size_t i = start; i < stop; ++i) rows[i] = jobs[i - start].get();
  }
  return rows;
}

/// Grid file: scenario and controller keys, where eta, psi, speed_kph and
/// preview_time may hold comma-separated lists.
struct SweepSpec
{
  VehicleParams params;
  ScenarioSpec scenario;
  ControllerConfig controller;
  SweepGrid grid;
};

inline SweepSpec load_sweep(const KeyValueFile & file, const VehicleParams & params)
{
  SweepSpec s;
  s.params = params;
  KeyValueFile rest = file;
  const auto take = [&](const char * key, std::vector<double> & dst) {
    if (const auto v = file.numbers(key)) dst = *v;
    rest = rest.without(key);
  };
  ControllerConfig defaults;
  ScenarioSpec scenario_defaults;
  s.grid.eta = {defaults.eta};
  s.grid.psi = {defaults.psi};
  s.grid.speed_kph = {scenario_defaults.speed_kph};
  s.grid.preview_time = {scenario_defaults.driver.preview_time};
  take("eta", s.grid.eta);
  take("psi", s.grid.psi);
  take("speed_kph", s.grid.speed_kph);
  take("preview_time", s.grid.preview_time);
  s.scenario = load_scenario(rest);
  s.controller = load_controller_config(rest);
  rest.require_all_used();
  for (double v : s.grid.eta) if (!(v > 0.0)) throw ConfigError("grid 'eta' values must be > 0", "eta");
  for (double v : s.grid.psi) if (!(v > 0.0)) throw ConfigError("grid 'psi' values must be > 0", "psi");
  for (double v : s.grid.speed_kph) if (!(v > 0.0)) throw ConfigError("grid 'speed_kph' values must be > 0", "speed_kph");
  for (double v : s.grid.preview_time)
    if (!(v > 0.0)) throw ConfigError("grid 'preview_time' values must be > 0", "preview_time");
  return s;
}

}  // namespace rollsim
