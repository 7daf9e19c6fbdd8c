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
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>

#include "rollsim/errors.hpp"

namespace rollsim
{

enum class Corner : std::size_t { fl = 0, fr = 1, rl = 2, rr = 3 };

inline constexpr std::array<Corner, 4> kCorners{Corner::fl, Corner::fr, Corner::rl, Corner::rr};

constexpr std::size_t index(Corner c) noexcept { return static_cast<std::size_t>(c); }

constexpr bool is_front(Corner c) noexcept { return c == Corner::fl || c == Corner::fr; }

constexpr bool is_left(Corner c) noexcept { return c == Corner::fl || c == Corner::rl; }

/// Vertical displacement of a sprung-mass corner per unit (l_s/2) sin(phi).
/// Positive roll lowers the left side and raises the right side.
constexpr double side_sign(Corner c) noexcept { return is_left(c) ? -1.0 : 1.0; }

/// Sign of a corner's force in the roll row of the allocation matrix.
constexpr double roll_row_sign(Corner c) noexcept { return is_left(c) ? 1.0 : -1.0; }

inline Corner corner_from_index(int i)
{
  if (i < 0 || i > 3) {
    throw InputError("invalid corner id " + std::to_string(i));
  }
  return static_cast<Corner>(i);
}

constexpr std::string_view corner_name(Corner c) noexcept
{
  switch (c) {
    case Corner::fl: return "fl";
    case Corner::fr: return "fr";
    case Corner::rl: return "rl";
    case Corner::rr: return "rr";
  }
  return "?";
}

/// Roll, heave and four unsprung displacements with their rates. Displacements are
/// measured from static equilibrium. The same layout holds a time derivative.
struct RollState
{
  double phi = 0.0;
  double phi_dot = 0.0;
  double z_s = 0.0;
  double z_s_dot = 0.0;
  std::array<double, 4> z_u{};
  std::array<double, 4> z_u_dot{};

  static constexpr std::size_t kSize = 12;

  std::array<double, kSize> to_array() const
  {
    return {phi, phi_dot, z_s, z_s_dot, z_u[0], z_u[1], z_u[2], z_u[3],
            z_u_dot[0], z_u_dot[1], z_u_dot[2], z_u_dot[3]};
  }

  static RollState from_array(const std::array<double, kSize> & v)
  {
    RollState x;
    x.phi = v[0];
    x.phi_dot = v[1];
    x.z_s = v[2];
    x.z_s_dot = v[3];
    for (std::size_t i = 0; i < 4; ++i) {
      x.z_u[i] = v[4 + i];
      x.z_u_dot[i] = v[8 + i];
    }
    return x;
  }

  bool all_finite() const
  {
    for (double v : to_array()) {
      if (!std::isfinite(v)) {
        return false;
      }
    }
    return true;
  }

  RollState & operator+=(const RollState & o)
  {
    phi += o.phi;
    phi_dot += o.phi_dot;
    z_s += o.z_s;
    z_s_dot += o.z_s_dot;
    for (std::size_t i = 0; i < 4; ++i) {
      z_u[i] += o.z_u[i];
      z_u_dot[i] += o.z_u_dot[i];
    }
    return *this;
  }

  RollState & operator*=(double k)
  {
    phi *= k;
    phi_dot *= k;
    z_s *= k;
    z_s_dot *= k;
    for (std::size_t i = 0; i < 4; ++i) {
      z_u[i] *= k;
      z_u_dot[i] *= k;
    }
    return *this;
  }

  friend RollState operator+(RollState a, const RollState & b) { return a += b; }
  friend RollState operator*(RollState a, double k) { return a *= k; }
  friend RollState operator*(double k, RollState a) { return a *= k; }
  friend bool operator==(const RollState &, const RollState &) = default;
};

using RollStateDerivative = RollState;

/// Road excitation seen by the plant at one instant. Defaults describe a flat road.
struct RoadInput
{
  std::array<double, 4> z_road{};
  double phi_road = 0.0;
  double phi_road_dot = 0.0;
  double a_y_true = 0.0;
};

/// Vertical actuator force commands per corner [N], ordered fl, fr, rl, rr.
/// Positive force produces positive roll moment on the left corners.
struct CornerForces
{
  std::array<double, 4> values{};

  double & operator[](Corner c) { return values[index(c)]; }
  double operator[](Corner c) const { return values[index(c)]; }

  double sum() const { return values[0] + values[1] + values[2] + values[3]; }

  friend bool operator==(const CornerForces &, const CornerForces &) = default;
};

}  // namespace rollsim
