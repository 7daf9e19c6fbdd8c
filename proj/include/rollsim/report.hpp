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

#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "rollsim/csv.hpp"
#include "rollsim/errors.hpp"
#include "rollsim/metrics.hpp"

namespace rollsim
{

// Report files are flat `key = value` lines; undefined reductions are written as `n/a`.

namespace detail
{

inline std::vector<std::pair<std::string, std::optional<double> ReductionReport::*>> optional_fields()
{
  return {
    {"reduction_roll", &ReductionReport::reduction_roll},
    {"reduction_rollrate", &ReductionReport::reduction_rollrate},
    {"reduction_pk2pk", &ReductionReport::reduction_pk2pk},
  };
}

inline std::vector<std::pair<std::string, double ReductionReport::*>> value_fields()
{
  return {
    {"peak_roll_passive", &ReductionReport::peak_roll_passive},
    {"peak_roll_active", &ReductionReport::peak_roll_active},
    {"peak_rollrate_passive", &ReductionReport::peak_rollrate_passive},
    {"peak_rollrate_active", &ReductionReport::peak_rollrate_active},
    {"pk2pk_rollrate_passive", &ReductionReport::pk2pk_rollrate_passive},
    {"pk2pk_rollrate_active", &ReductionReport::pk2pk_rollrate_active},
    {"oscillation_index_passive", &ReductionReport::oscillation_index_passive},
    {"oscillation_index_active", &ReductionReport::oscillation_index_active},
  };
}

}  // namespace detail

inline void write_report(std::ostream & os, const ReductionReport & r)
{
  for (const auto & [key, member] : detail::value_fields()) {
    os << key << " = " << format_double(r.*member) << '\n';
  }
  for (const auto & [key, member] : detail::optional_fields()) {
    const auto & v = r.*member;
    os << key << " = " << (v ? format_double(*v) : std::string("n/a")) << '\n';
  }
}

inline ReductionReport parse_report(std::istream & is)
{
  std::map<std::string, std::string> kv;
  std::string line;
  while (std::getline(is, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
    };
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  ReductionReport r;
  const auto need = [&](const std::string & key) -> const std::string & {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("report is missing '" + key + "'", key);
    return it->second;
  };
  for (const auto & [key, member] : detail::value_fields()) {
    r.*member = parse_double(need(key), key);
  }
  for (const auto & [key, member] : detail::optional_fields()) {
    const std::string & v = need(key);
    r.*member = v == "n/a" ? std::nullopt : std::optional<double>(parse_double(v, key));
  }
  return r;
}

}  // namespace rollsim
