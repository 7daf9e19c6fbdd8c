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

#include <array>
#include <charconv>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "rollsim/errors.hpp"
#include "rollsim/metrics.hpp"
#include "rollsim/sim.hpp"

namespace rollsim
{

/// Shortest text that parses back to the same double.
inline std::string format_double(double v)
{
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  if (ec != std::errc{}) throw InputError("cannot format number");
  return std::string(buf.data(), end);
}

inline double parse_double(std::string_view s, const std::string & what)
{
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || end != s.data() + s.size()) {
    throw ConfigError("invalid number '" + std::string(s) + "' for " + what, what);
  }
  return v;
}

/// Column headers of the simulation CSV, in order, with units.
inline const std::vector<std::string> & csv_columns()
{
  static const std::vector<std::string> cols{
    "t[s]",         "phi[rad]",       "phi_dot[rad/s]", "z_s[m]",         "z_s_dot[m/s]",
    "z_u_fl[m]",    "z_u_fr[m]",      "z_u_rl[m]",      "z_u_rr[m]",      "z_u_fl_dot[m/s]",
    "z_u_fr_dot[m/s]", "z_u_rl_dot[m/s]", "z_u_rr_dot[m/s]", "u_phi[N*m]", "s[rad]",
    "F_fl[N]",      "F_fr[N]",        "F_rl[N]",        "F_rr[N]",        "a_y[m/s^2]",
    "delta[rad]",   "flags[-]"};
  return cols;
}

inline void write_csv(std::ostream & os, const SimResult & r)
{
  const auto & cols = csv_columns();
  for (std::size_t i = 0; i < cols.size(); ++i) {
    os << (i ? "," : "") << cols[i];
  }
  os << '\n';
  for (const Sample & s : r.samples) {
    os << format_double(s.t);
    for (double v : s.x.to_array()) os << ',' << format_double(v);
    os << ',' << format_double(s.u_phi) << ',' << format_double(s.s);
    for (double f : s.forces.values) os << ',' << format_double(f);
    os << ',' << format_double(s.a_y) << ',' << format_double(s.delta) << ',' << s.flags << '\n';
  }
}

namespace detail
{

inline std::vector<std::string_view> split(std::string_view line, char sep)
{
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

inline std::string_view column_name(std::string_view header)
{
  const std::size_t bracket = header.find('[');
  return header.substr(0, bracket);
}

}  // namespace detail

/// Reads t, phi and phi_dot back from a simulation CSV (columns located by name).
inline Trace read_trace_csv(std::istream & is)
{
  std::string line;
  if (!std::getline(is, line)) throw ConfigError("empty CSV input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  const auto header = detail::split(line, ',');
  std::ptrdiff_t it = -1, iphi = -1, irate = -1;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = detail::column_name(header[i]);
    if (name == "t") it = static_cast<std::ptrdiff_t>(i);
    if (name == "phi") iphi = static_cast<std::ptrdiff_t>(i);
    if (name == "phi_dot") irate = static_cast<std::ptrdiff_t>(i);
  }
  if (it < 0 || iphi < 0 || irate < 0) throw ConfigError("CSV header lacks t, phi or phi_dot columns");

  Trace tr;
  std::size_t row = 1;
  while (std::getline(is, line)) {
    ++row;
    if (line.empty() || line == "\r") continue;
    const auto cells = detail::split(line, ',');
    if (cells.size() != header.size()) {
      throw ConfigError("CSV row " + std::to_string(row) + " has " + std::to_string(cells.size()) + " cells");
    }
    tr.t.push_back(parse_double(cells[static_cast<std::size_t>(it)], "t"));
    tr.phi.push_back(parse_double(cells[static_cast<std::size_t>(iphi)], "phi"));
    tr.phi_dot.push_back(parse_double(cells[static_cast<std::size_t>(irate)], "phi_dot"));
  }
  return tr;
}

}  // namespace rollsim
