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

// rollsim command-line front end.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>

#include "rollsim/acceptance.hpp"
#include "rollsim.hpp"

namespace fs = std::filesystem;
using namespace rollsim;

namespace
{

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAcceptance = 2;
constexpr int kExitBlowup = 3;

std::string default_out_dir()
{
  const char * env = std::getenv("ROLLSIM_OUT_DIR");
  return env && *env ? env : "rollsim_out";
}

/// Loads each distinct config path once so a single file may hold several sections.
class ConfigSet
{
public:
  const KeyValueFile * get(const std::string & path)
  {
    if (path.empty()) return nullptr;
    auto it = files_.find(path);
    if (it == files_.end()) {
      it = files_.emplace(path, std::make_unique<KeyValueFile>(KeyValueFile::load(path))).first;
    }
    return it->second.get();
  }

  void require_all_used() const
  {
    for (const auto & [path, f] : files_) f->require_all_used();
  }

private:
  std::map<std::string, std::unique_ptr<KeyValueFile>> files_;
};

const KeyValueFile & or_empty(const KeyValueFile * f)
{
  static const KeyValueFile empty = KeyValueFile::from_string("");
  return f ? *f : empty;
}

struct Inputs
{
  VehicleParams params;
  ControllerConfig controller;
  ScenarioSpec scenario;
};

Inputs load_inputs(const std::string & scenario, const std::string & vehicle, const std::string & controller)
{
  ConfigSet files;
  Inputs in;
  in.params = load_vehicle_params(or_empty(files.get(vehicle)));
  in.controller = load_controller_config(or_empty(files.get(controller)));
  in.scenario = load_scenario(or_empty(files.get(scenario)));
  files.require_all_used();
  return in;
}

void write_file(const fs::path & path, const auto & writer)
{
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream os(path);
  if (!os) throw ConfigError("cannot write '" + path.string() + "'");
  writer(os);
}

int termination_code(const SimResult & r)
{
  if (r.termination == Termination::blowup) {
    std::cerr << "numerical blowup: " << r.message << '\n';
    return kExitBlowup;
  }
  if (r.termination != Termination::completed) {
    std::cerr << "run terminated early (" << to_string(r.termination) << "): " << r.message << '\n';
  }
  if (r.travel_violation_steps > 0) {
    std::cerr << "warning: suspension travel exceeded the limit on " << r.travel_violation_steps
              << " steps (max " << r.max_travel << " m)\n";
  }
  if (r.saturation_steps > 0) {
    std::cerr << "warning: actuator saturation on " << r.saturation_steps << " steps\n";
  }
  return kExitOk;
}

void write_sweep_csv(std::ostream & os, const std::vector<SweepRow> & rows)
{
  os << "eta,psi,speed_kph,preview_time,peak_roll_passive,peak_roll_active,peak_rollrate_passive,"
        "peak_rollrate_active,reduction_roll,reduction_rollrate,reduction_pk2pk,"
        "oscillation_index_active,response_delay,passive_termination,active_termination,"
        "active_saturation_steps\n";
  const auto opt = [](const std::optional<double> & v) { return v ? format_double(*v) : std::string("n/a"); };
  for (const SweepRow & r : rows) {
    os << format_double(r.point.eta) << ',' << format_double(r.point.psi) << ','
       << format_double(r.point.speed_kph) << ',' << format_double(r.point.preview_time) << ','
       << format_double(r.report.peak_roll_passive) << ',' << format_double(r.report.peak_roll_active) << ','
       << format_double(r.report.peak_rollrate_passive) << ','
       << format_double(r.report.peak_rollrate_active) << ',' << opt(r.report.reduction_roll) << ','
       << opt(r.report.reduction_rollrate) << ',' << opt(r.report.reduction_pk2pk) << ','
       << format_double(r.report.oscillation_index_active) << ',' << opt(r.response_delay) << ','
       << to_string(r.passive_termination) << ',' << to_string(r.active_termination) << ','
       << r.active_saturation_steps << '\n';
  }
}

Trace read_trace_file(const std::string & path)
{
  std::ifstream is(path);
  if (!is) throw ConfigError("cannot open CSV '" + path + "'");
  return read_trace_csv(is);
}

}  // namespace

int main(int argc, char ** argv)
{
  CLI::App app{"Vehicle roll dynamics simulator with sliding-mode active suspension roll control"};
  app.require_subcommand(1);

  std::string scenario, vehicle, controller, out_dir = default_out_dir();
  bool passive = false;

  auto * run_cmd = app.add_subcommand("run-scenario", "simulate one scenario and write its CSV");
  run_cmd->add_option("--scenario", scenario, "scenario config file")->required();
  run_cmd->add_option("--vehicle", vehicle, "vehicle config file");
  run_cmd->add_option("--controller", controller, "controller config file");
  run_cmd->add_option("--out", out_dir, "output directory (default $ROLLSIM_OUT_DIR)");
  run_cmd->add_flag("--passive", passive, "disable the roll controller");

  auto * pair_cmd = app.add_subcommand("run-pair", "simulate passive and active runs and write a report");
  pair_cmd->add_option("--scenario", scenario, "scenario config file")->required();
  pair_cmd->add_option("--vehicle", vehicle, "vehicle config file");
  pair_cmd->add_option("--controller", controller, "controller config file");
  pair_cmd->add_option("--out", out_dir, "output directory (default $ROLLSIM_OUT_DIR)");

  std::string grid;
  unsigned threads = 0;
  auto * sweep_cmd = app.add_subcommand("sweep", "run a parameter grid; one metrics row per grid point");
  sweep_cmd->add_option("--grid", grid, "grid config file")->required();
  sweep_cmd->add_option("--vehicle", vehicle, "vehicle config file");
  sweep_cmd->add_option("--out", out_dir, "output directory (default $ROLLSIM_OUT_DIR)");
  sweep_cmd->add_option("--threads", threads, "worker threads (default: hardware concurrency)");

  std::string passive_csv, active_csv, report_out;
  auto * report_cmd = app.add_subcommand("report", "compute reduction metrics from two run CSVs");
  report_cmd->add_option("--passive", passive_csv, "passive run CSV")->required();
  report_cmd->add_option("--active", active_csv, "active run CSV")->required();
  report_cmd->add_option("--out", report_out, "report file (default: stdout)");

  auto * verify_cmd = app.add_subcommand("verify", "run the acceptance suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError & e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }

  try {
    if (*run_cmd) {
      const Inputs in = load_inputs(scenario, vehicle, controller);
      ControllerConfig c = in.controller;
      if (passive) c.enabled = false;
      const SimResult r = run(in.params, in.scenario.sim, c, build_profile(in.scenario, in.params));
      const fs::path path = fs::path(out_dir) / (c.enabled ? "active.csv" : "passive.csv");
      write_file(path, [&](std::ostream & os) { write_csv(os, r); });
      std::cout << path.string() << '\n';
      return termination_code(r);
    }
    if (*pair_cmd) {
      const Inputs in = load_inputs(scenario, vehicle, controller);
      const ManeuverProfile m = build_profile(in.scenario, in.params);
      const RunPair pr = run_pair(in.params, in.scenario.sim, in.controller, m);
      const fs::path dir(out_dir);
      write_file(dir / "passive.csv", [&](std::ostream & os) { write_csv(os, pr.passive); });
      write_file(dir / "active.csv", [&](std::ostream & os) { write_csv(os, pr.active); });
      const ReductionReport rep = reduction_metrics(pr.passive, pr.active);
      write_file(dir / "report.txt", [&](std::ostream & os) { write_report(os, rep); });
      write_report(std::cout, rep);
      const int a = termination_code(pr.passive);
      const int b = termination_code(pr.active);
      return std::max(a, b);
    }
    if (*sweep_cmd) {
      ConfigSet files;
      const VehicleParams p = load_vehicle_params(or_empty(files.get(vehicle)));
      files.require_all_used();
      const SweepSpec spec = load_sweep(KeyValueFile::load(grid), p);
      const auto rows = threads ? sweep(spec.params, spec.scenario, spec.controller, spec.grid, threads)
                                : sweep(spec.params, spec.scenario, spec.controller, spec.grid);
      const fs::path path = fs::path(out_dir) / "sweep.csv";
      write_file(path, [&](std::ostream & os) { write_sweep_csv(os, rows); });
      write_sweep_csv(std::cout, rows);
      for (const SweepRow & r : rows) {
        if (r.passive_termination == Termination::blowup || r.active_termination == Termination::blowup) {
          return kExitBlowup;
        }
      }
      return kExitOk;
    }
    if (*report_cmd) {
      const ReductionReport rep = reduction_metrics(read_trace_file(passive_csv), read_trace_file(active_csv));
      if (report_out.empty()) {
        write_report(std::cout, rep);
      } else {
        write_file(report_out, [&](std::ostream & os) { write_report(os, rep); });
      }
      return kExitOk;
    }
    if (*verify_cmd) {
      return acceptance::report(acceptance::run_all(), std::cout) ? kExitOk : kExitAcceptance;
    }
  } catch (const ConfigError & e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const InputError & e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const ModelBlowup & e) {
    std::cerr << "numerical blowup: " << e.what() << '\n';
    return kExitBlowup;
  }
  return kExitOk;
}
