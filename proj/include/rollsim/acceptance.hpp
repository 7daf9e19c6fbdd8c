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
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rollsim/allocation.hpp"
#include "rollsim/controller.hpp"
#include "rollsim/maneuvers.hpp"
#include "rollsim/metrics.hpp"
#include "rollsim/reference_laws.hpp"
#include "rollsim/sim.hpp"
#include "rollsim/vehicle_model.hpp"

// Exit criteria for the simulator: reduction ratios on the slalom and J-turn,
// gain and preview orderings, and the structural properties of the controller.

namespace rollsim::acceptance
{

struct CriterionResult
{
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail
{

inline std::string fmt(double v, int digits = 4)
{
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline double opt(const std::optional<double> & v) { return v.value_or(std::nan("")); }

struct TimedPair
{
  RunPair pair;
  double seconds = 0.0;
};

inline TimedPair timed_pair(const VehicleParams & p, const SimConfig & sim, const ControllerConfig & c, const ManeuverProfile & m)
{
  const auto t0 = std::chrono::steady_clock::now();
  TimedPair tp{run_pair(p, sim, c, m), 0.0};
  tp.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return tp;
}

struct ResidualStats
{
  double max_residual = 0.0;         // max |s' + eta s|
  double max_eta_s = 0.0;            // max |eta s|
  double max_bound_excess = -1e300;  // max (|s' + eta s| - dropped-term bound)
  double max_lyapunov_excess = -1e300;  // max (V' + 0.99 eta s^2)
};

/// Evaluates s' = phi_dot + psi phi_ddot at every recorded sample, using the moment
/// the controller actually applied at that sample.
inline ResidualStats sliding_residuals(
  const VehicleParams & p, const ControllerConfig & c, const ManeuverProfile & m, const SimResult & r)
{
  ResidualStats st;
  const double I = p.effective_roll_inertia();
  for (const Sample & smp : r.samples) {
    const RoadInput road = road_input_at(p, m, smp.t);
    const double phi_ddot = roll_acceleration(p, smp.x, road, roll_moment(p, smp.forces));
    const double s = sliding_surface(smp.x.phi, smp.x.phi_dot, c.psi);
    const double s_dot = smp.x.phi_dot + c.psi * phi_ddot;
    const double residual = std::abs(s_dot + c.eta * s);
    const double bound = c.psi * reference::dropped_coupling_bound(p, smp.x) / I;
    st.max_residual = std::max(st.max_residual, residual);
    st.max_eta_s = std::max(st.max_eta_s, std::abs(c.eta * s));
    st.max_bound_excess = std::max(st.max_bound_excess, residual - bound);
    st.max_lyapunov_excess = std::max(st.max_lyapunov_excess, s * s_dot + 0.99 * c.eta * s * s);
  }
  return st;
}

}  // namespace detail

inline std::vector<CriterionResult> run_all()
{
  using detail::fmt;
  const VehicleParams params;
  const ControllerConfig ctrl;  // eta = 15, psi = 0.5
  SimConfig sim;                // rk4, dt = 1 ms, perfect measurements
  std::vector<CriterionResult> out;

  // 1, 2: slalom reductions.
  {
    CriterionResult c1{1, "slalom peak roll-angle reduction >= 60% at 30/35/40 kph (< 5 s per pair)", true, ""};
    CriterionResult c2{2, "slalom peak roll-rate reduction >= 80% at 30/35/40 kph", true, ""};
    for (double kph : {30.0, 35.0, 40.0}) {
      const ManeuverProfile m = slalom_profile(params, kph_to_mps(kph), PreviewDriver{}, 13.0);
      const auto tp = detail::timed_pair(params, sim, ctrl, m);
      const ReductionReport r = reduction_metrics(tp.pair.passive, tp.pair.active);
      const double rr = detail::opt(r.reduction_roll);
      const double rrate = detail::opt(r.reduction_rollrate);
      const bool clean = tp.pair.passive.termination == Termination::completed &&
                         tp.pair.active.termination == Termination::completed;
      c1.passed = c1.passed && clean && rr >= 0.60 && tp.seconds < 5.0;
      c2.passed = c2.passed && clean && rrate >= 0.80;
      c1.detail += fmt(kph, 3) + "kph=" + fmt(rr) + " (" + fmt(tp.seconds, 2) + " s, sat=" +
                   std::to_string(tp.pair.active.saturation_steps) + ") ";
      c2.detail += fmt(kph, 3) + "kph=" + fmt(rrate) + " ";
    }
    out.push_back(c1);
    out.push_back(c2);
  }

  // 3: J-turn reductions and response delay.
  {
    CriterionResult c{3, "J-turn roll reduction >= 50%, pk2pk roll-rate reduction >= 45% at 60/72/80 kph; response_delay(80 kph) > 0", true, ""};
    for (double kph : {60.0, 72.0, 80.0}) {
      const ManeuverProfile m = jturn_profile(params, kph_to_mps(kph));
      const RunPair pr = run_pair(params, sim, ctrl, m);
      const ReductionReport r = reduction_metrics(pr.passive, pr.active);
      const double rr = detail::opt(r.reduction_roll);
      const double rp = detail::opt(r.reduction_pk2pk);
      c.passed = c.passed && rr >= 0.50 && rp >= 0.45;
      c.detail += fmt(kph, 3) + "kph roll=" + fmt(rr) + " pk2pk=" + fmt(rp);
      if (kph == 80.0) {
        const auto delay = response_delay(pr.passive, pr.active, 0.5);
        c.passed = c.passed && delay && *delay > 0.0;
        c.detail += " delay=" + (delay ? fmt(*delay) + " s" : std::string("n/a"));
        for (double ramp : {0.15, 0.35}) {
          JTurnOptions o;
          o.ramp_time = ramp;
          const RunPair ps = run_pair(params, sim, ctrl, jturn_profile(params, kph_to_mps(kph), o));
          const auto d = response_delay(ps.passive, ps.active, 0.5);
          c.detail += " [ramp " + fmt(ramp, 2) + " s: roll=" +
                      fmt(detail::opt(reduction_metrics(ps.passive, ps.active).reduction_roll)) +
                      " delay=" + (d ? fmt(*d) : std::string("n/a")) + "]";
        }
      }
      c.detail += "; ";
    }
    out.push_back(c);
  }

  // 4: oscillation ordering over sliding gains.
  {
    CriterionResult c{4, "J-turn 60 kph oscillation_index(eta=30) > (eta=25) > (eta=15)", false, ""};
    const ManeuverProfile m = jturn_profile(params, kph_to_mps(60.0));
    std::map<double, double> index;
    for (double eta : {15.0, 25.0, 30.0}) {
      ControllerConfig ce = ctrl;
      ce.eta = eta;
      const SimResult r = run(params, sim, ce, m);
      const Trace tr = trace_of(r);
      index[eta] = oscillation_index(tr.t, tr.phi_dot, oscillation_start(tr, MetricOptions{}));
      c.detail += "eta=" + fmt(eta, 3) + ": " + fmt(index[eta]) + " ";
    }
    c.passed = index[30.0] > index[25.0] && index[25.0] > index[15.0];
    out.push_back(c);
  }

  // 5: preview-time ordering (active suspension).
  {
    CriterionResult c{5, "slalom preview: peak roll rate T_p=0.6 <= T_p=0.4 at 40 kph; < 20% apart at 30 kph", false, ""};
    const auto peak_rate = [&](double kph, double tp) {
      PreviewDriver d;
      d.preview_time = tp;
      const SimResult r = run(params, sim, ctrl, slalom_profile(params, kph_to_mps(kph), d, 13.0));
      const Trace tr = trace_of(r);
      return peak_abs(tr.t, tr.phi_dot, MetricOptions{}.transient_skip);
    };
    const double p40_4 = peak_rate(40.0, 0.4), p40_6 = peak_rate(40.0, 0.6);
    const double p30_4 = peak_rate(30.0, 0.4), p30_6 = peak_rate(30.0, 0.6);
    const double rel30 = std::abs(p30_6 - p30_4) / std::max(p30_4, p30_6);
    c.passed = p40_6 <= p40_4 && rel30 < 0.20;
    c.detail = "40kph: " + fmt(p40_6) + " vs " + fmt(p40_4) + " rad/s; 30kph rel diff=" + fmt(rel30);
    out.push_back(c);
  }

  // 6, 7: sliding identity and Lyapunov decrease on the J-turn at 60 kph.
  {
    const ManeuverProfile m = jturn_profile(params, kph_to_mps(60.0));
    ControllerConfig exact = ctrl;
    exact.variant = ControlVariant::full;
    const SimResult r_exact = run(params, sim, exact, m, reference::control_law_exact);
    const auto st = detail::sliding_residuals(params, exact, m, r_exact);
    const SimResult r_shipped = run(params, sim, ctrl, m);
    const auto ss = detail::sliding_residuals(params, ctrl, m, r_shipped);

    CriterionResult c6{6, "sliding identity |s'+eta s| < 1e-9 max|eta s| (exact law); shipped law within dropped-term bound", false, ""};
    const bool identity = st.max_residual < 1e-9 * st.max_eta_s;
    const bool bound = ss.max_bound_excess <= 1e-9 * ss.max_eta_s;
    c6.passed = identity && bound && r_exact.saturation_steps == 0 && r_shipped.saturation_steps == 0;
    c6.detail = "exact: max residual=" + fmt(st.max_residual) + " max|eta s|=" + fmt(st.max_eta_s) +
                "; shipped: max(residual - bound)=" + fmt(ss.max_bound_excess) +
                " max residual=" + fmt(ss.max_residual);
    out.push_back(c6);

    CriterionResult c7{7, "Lyapunov: V' <= -0.99 eta s^2 + 1e-8 along the exact-law run", false, ""};
    c7.passed = st.max_lyapunov_excess <= 1e-8;
    c7.detail = "max(V' + 0.99 eta s^2)=" + fmt(st.max_lyapunov_excess);
    out.push_back(c7);
  }

  // 8: allocation exactness and minimum norm.
  {
    CriterionResult c{8, "allocation: |A F - u| <= 1e-12 |u| (1000 draws), min-norm vs 100 null-space perturbations each", true, ""};
    const ForceAllocator alloc(params);
    const AllocationMatrix & A = alloc.matrix();
    const Eigen::Matrix4d projector = Eigen::Matrix4d::Identity() - alloc.pseudo_inverse() * A;
    std::mt19937_64 rng(20240901);
    std::uniform_real_distribution<double> cmd(-5000.0, 5000.0);
    std::uniform_real_distribution<double> pert(-1000.0, 1000.0);
    double worst_rel = 0.0;
    std::size_t norm_failures = 0;
    for (int i = 0; i < 1000; ++i) {
      const Eigen::Vector3d u(cmd(rng), cmd(rng), cmd(rng));
      const CornerForces f = alloc.solve(u[0], u[1], u[2]);
      const Eigen::Vector4d F(f.values[0], f.values[1], f.values[2], f.values[3]);
      worst_rel = std::max(worst_rel, (A * F - u).norm() / u.norm());
      for (int j = 0; j < 100; ++j) {
        const Eigen::Vector4d n = projector * Eigen::Vector4d(pert(rng), pert(rng), pert(rng), pert(rng));
        if (F.norm() > (F + n).norm()) ++norm_failures;
      }
    }
    c.passed = worst_rel <= 1e-12 && norm_failures == 0;
    c.detail = "worst relative residual=" + fmt(worst_rel) + ", min-norm violations=" + std::to_string(norm_failures);
    out.push_back(c);
  }

  // 9: RK4 convergence order.
  {
    CriterionResult c{9, "RK4 halving-step error ratio in [12, 20] on a smooth 2 s slalom segment", false, ""};
    const double v = kph_to_mps(30.0);
    const double freq = v / (2.0 * PreviewDriver{}.cone_spacing);
    const ManeuverProfile m = sine_steer_profile(v, 0.05, freq, 2.0);
    ControllerConfig passive = ctrl;
    passive.enabled = false;
    const auto final_state = [&](double dt) {
      SimConfig s;
      s.dt = dt;
      s.record_decimation = 1000000;
      return run(params, s, passive, m).samples.back().x;
    };
    const auto diff = [](const RollState & a, const RollState & b) {
      const auto x = a.to_array();
      const auto y = b.to_array();
      double sum = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) sum += (x[i] - y[i]) * (x[i] - y[i]);
      return std::sqrt(sum);
    };
    const RollState ref = final_state(0.004 / 16.0);
    const double e1 = diff(final_state(0.004), ref);
    const double e2 = diff(final_state(0.002), ref);
    const double ratio = e1 / e2;
    c.passed = ratio >= 12.0 && ratio <= 20.0;
    c.detail = "e(4 ms)=" + fmt(e1) + " e(2 ms)=" + fmt(e2) + " ratio=" + fmt(ratio);
    out.push_back(c);
  }

  // 10: equilibrium and symmetry identities.
  {
    CriterionResult c{10, "fixed point, passive zero forces, banked reduction identity, mirror antisymmetry (1e-12)", true, ""};
    ManeuverProfile still;
    still.x_dot = kph_to_mps(30.0);
    still.duration = 2.0;
    double worst_state = 0.0;
    double worst_force = 0.0;
    for (bool enabled : {false, true}) {
      ControllerConfig ce = ctrl;
      ce.enabled = enabled;
      for (const Sample & s : run(params, sim, ce, still).samples) {
        for (double v : s.x.to_array()) worst_state = std::max(worst_state, std::abs(v));
      }
    }
    const ManeuverProfile slalom = slalom_profile(params, kph_to_mps(35.0), PreviewDriver{}, 13.0);
    ControllerConfig off = ctrl;
    off.enabled = false;
    for (const Sample & s : run(params, sim, off, slalom).samples) {
      for (double f : s.forces.values) worst_force = std::max(worst_force, std::abs(f));
    }

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ang(-0.3, 0.3);
    std::uniform_real_distribution<double> disp(-0.05, 0.05);
    double worst_bank = 0.0;
    double worst_mirror = 0.0;
    for (int i = 0; i < 1000; ++i) {
      ControllerInputs in{ang(rng), ang(rng), ang(rng) * 0.5, 5.0 + 20.0 * std::abs(ang(rng)), 0.0, 0.0, 0.0};
      const double a = control_law_banked(params, ctrl, in);
      const double b = control_law_implemented(params, ctrl, in);
      worst_bank = std::max(worst_bank, std::abs(a - b) / std::max(1.0, std::abs(b)));

      RollState x;
      x.phi = ang(rng);
      x.phi_dot = ang(rng);
      x.z_s = disp(rng);
      x.z_s_dot = disp(rng);
      RoadInput road;
      CornerForces f;
      for (std::size_t k = 0; k < 4; ++k) {
        x.z_u[k] = disp(rng);
        x.z_u_dot[k] = disp(rng);
        road.z_road[k] = disp(rng);
        f.values[k] = 1000.0 * disp(rng);
      }
      road.a_y_true = 40.0 * disp(rng);
      RollState mx = x;
      mx.phi = -x.phi;
      mx.phi_dot = -x.phi_dot;
      RoadInput mroad = road;
      mroad.a_y_true = -road.a_y_true;
      CornerForces mf = f;
      for (auto [l, r] : {std::pair<std::size_t, std::size_t>{0, 1}, {2, 3}}) {
        std::swap(mx.z_u[l], mx.z_u[r]);
        std::swap(mx.z_u_dot[l], mx.z_u_dot[r]);
        std::swap(mroad.z_road[l], mroad.z_road[r]);
        std::swap(mf.values[l], mf.values[r]);
      }
      const double acc = roll_acceleration(params, x, road, roll_moment(params, f));
      const double macc = roll_acceleration(params, mx, mroad, roll_moment(params, mf));
      worst_mirror = std::max(worst_mirror, std::abs(acc + macc) / std::max(1.0, std::abs(acc)));
    }
    c.passed = worst_state <= 1e-12 && worst_force <= 1e-12 && worst_bank <= 1e-12 && worst_mirror <= 1e-12;
    c.detail = "max|x| at rest=" + fmt(worst_state) + " max|F| passive=" + fmt(worst_force) +
               " banked-vs-implemented=" + fmt(worst_bank) + " mirror=" + fmt(worst_mirror);
    out.push_back(c);
  }
  return out;
}

/// Prints one line per criterion; returns true when all pass.
inline bool report(const std::vector<CriterionResult> & results, std::ostream & os)
{
  bool ok = true;
  for (const auto & r : results) {
    os << (r.passed ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name << " | " << r.detail << '\n';
    ok = ok && r.passed;
  }
  return ok;
}

}  // namespace rollsim::acceptance
