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
#include <cstddef>
#include <limits>
#include <optional>
#include <vector>

#include "rollsim/errors.hpp"
#include "rollsim/sim.hpp"

namespace rollsim
{

/// Roll angle and roll rate time series, as recorded in a SimResult or read back from CSV.
struct Trace
{
  std::vector<double> t;
  std::vector<double> phi;
  std::vector<double> phi_dot;
};

inline Trace trace_of(const SimResult & r)
{
  Trace tr;
  tr.t.reserve(r.samples.size());
  tr.phi.reserve(r.samples.size());
  tr.phi_dot.reserve(r.samples.size());
  for (const Sample & s : r.samples) {
    tr.t.push_back(s.t);
    tr.phi.push_back(s.x.phi);
    tr.phi_dot.push_back(s.x.phi_dot);
  }
  return tr;
}

struct MetricOptions
{
  double transient_skip = 0.5;       // entry transient excluded from peaks [s]
  double oscillation_fraction = 0.5;  // trailing fraction of the run scored for oscillation
  double delay_threshold = 0.5;       // fraction of peak for response_delay
};

/// max |v| over samples with t >= t_from.
inline double peak_abs(const std::vector<double> & t, const std::vector<double> & v, double t_from)
{
  double m = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (t[i] >= t_from) m = std::max(m, std::abs(v[i]));
  }
  return m;
}

inline double peak_to_peak(const std::vector<double> & t, const std::vector<double> & v, double t_from)
{
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (t[i] >= t_from) {
      lo = std::min(lo, v[i]);
      hi = std::max(hi, v[i]);
    }
  }
  return hi >= lo ? hi - lo : 0.0;
}

/// Amplitude-weighted zero-crossing count over t >= t_from: each sign change adds
/// the largest |v| of the lobe it closes.
inline double oscillation_index(const std::vector<double> & t, const std::vector<double> & v, double t_from)
{
  double total = 0.0;
  double lobe_peak = 0.0;
  int sign = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (t[i] < t_from) continue;
    const int s = v[i] > 0.0 ? 1 : (v[i] < 0.0 ? -1 : 0);
    if (s != 0 && sign != 0 && s != sign) {
      total += lobe_peak;
      lobe_peak = 0.0;
    }
    if (s != 0) sign = s;
    lobe_peak = std::max(lobe_peak, std::abs(v[i]));
  }
  return total;
}

/// First time |v| reaches `fraction` of its post-transient peak; nullopt for a zero signal.
inline std::optional<double> time_to_fraction(
  const std::vector<double> & t, const std::vector<double> & v, double fraction, double t_from)
{
  const double peak = peak_abs(t, v, t_from);
  if (peak == 0.0) return std::nullopt;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (std::abs(v[i]) >= fraction * peak) return t[i];
  }
  return std::nullopt;
}

/// 1 - active/passive, undefined when the passive peak is zero.
inline std::optional<double> reduction(double passive, double active)
{
  if (passive == 0.0) return std::nullopt;
  return 1.0 - active / passive;
}

struct ReductionReport
{
  double peak_roll_passive = 0.0;
  double peak_roll_active = 0.0;
  double peak_rollrate_passive = 0.0;
  double peak_rollrate_active = 0.0;
  double pk2pk_rollrate_passive = 0.0;
  double pk2pk_rollrate_active = 0.0;
  std::optional<double> reduction_roll;
  std::optional<double> reduction_rollrate;
  std::optional<double> reduction_pk2pk;
  double oscillation_index_passive = 0.0;
  double oscillation_index_active = 0.0;

  friend bool operator==(const ReductionReport &, const ReductionReport &) = default;
};

inline double oscillation_start(const Trace & tr, const MetricOptions & o)
{
  if (tr.t.empty()) return 0.0;
  return tr.t.front() + (1.0 - o.oscillation_fraction) * (tr.t.back() - tr.t.front());
}

inline ReductionReport reduction_metrics(const Trace & passive, const Trace & active, const MetricOptions & o = {})
{
  if (passive.t.empty() || active.t.empty()) {
    throw InputError("reduction_metrics needs non-empty series");
  }
  ReductionReport r;
  r.peak_roll_passive = peak_abs(passive.t, passive.phi, o.transient_skip);
  r.peak_roll_active = peak_abs(active.t, active.phi, o.transient_skip);
  r.peak_rollrate_passive = peak_abs(passive.t, passive.phi_dot, o.transient_skip);
  r.peak_rollrate_active = peak_abs(active.t, active.phi_dot, o.transient_skip);
  r.pk2pk_rollrate_passive = peak_to_peak(passive.t, passive.phi_dot, o.transient_skip);
  r.pk2pk_rollrate_active = peak_to_peak(active.t, active.phi_dot, o.transient_skip);
  r.reduction_roll = reduction(r.peak_roll_passive, r.peak_roll_active);
  r.reduction_rollrate = reduction(r.peak_rollrate_passive, r.peak_rollrate_active);
  r.reduction_pk2pk = reduction(r.pk2pk_rollrate_passive, r.pk2pk_rollrate_active);
  r.oscillation_index_passive = oscillation_index(passive.t, passive.phi_dot, oscillation_start(passive, o));
  r.oscillation_index_active = oscillation_index(active.t, active.phi_dot, oscillation_start(active, o));
  return r;
}

inline ReductionReport reduction_metrics(const SimResult & passive, const SimResult & active, const MetricOptions & o = {})
{
  return reduction_metrics(trace_of(passive), trace_of(active), o);
}

/// t_passive - t_active for the roll angle reaching `threshold` of its own peak;
/// positive when the active response is faster. nullopt if either never responds.
inline std::optional<double> response_delay(
  const Trace & passive, const Trace & active, double threshold = 0.5, const MetricOptions & o = {})
{
  const auto tp = time_to_fraction(passive.t, passive.phi, threshold, o.transient_skip);
  const auto ta = time_to_fraction(active.t, active.phi, threshold, o.transient_skip);
  if (!tp || !ta) return std::nullopt;
  return *tp - *ta;
}

inline std::optional<double> response_delay(
  const SimResult & passive, const SimResult & active, double threshold = 0.5, const MetricOptions & o = {})
{
  return response_delay(trace_of(passive), trace_of(active), threshold, o);
}

}  // namespace rollsim
