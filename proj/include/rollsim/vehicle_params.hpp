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

#include <cmath>
#include <string>

#include "rollsim/errors.hpp"

namespace rollsim
{

/// Physical constants of the sprung body, four unsprung corners, suspension and tires.
/// Defaults are the reference electric vehicle (820 kg sprung mass, 2.3 m wheelbase).
struct VehicleParams
{
  double m_s = 820.0;             // sprung mass [kg]
  double m_u = 60.0;              // unsprung mass per corner [kg]
  double I_xx = 120.0;            // sprung roll inertia [kg m^2]
  double h_phi = 0.48;            // roll-center height [m]
  double l_s = 1.3;               // track width [m]
  double l_w = 2.3;               // wheelbase [m]
  double a = 1.15;                // front axle to CG [m]
  double l = 2.3;                 // length used in the pitch allocation row [m]
  double k_f = 12000.0;           // [N/m]
  double k_r = 35000.0;           // [N/m]
  double b_f = 530.0;             // [N s/m]
  double b_r = 850.0;             // [N s/m]
  double k_t = 200000.0;          // tire vertical stiffness [N/m]
  double K_u = 0.002 / 820.0;     // understeer gradient [rad s^2/(kg m)], K_u*m_s = 0.002 rad s^2/m
  double g = 9.81;                // [m/s^2]

  /// I_xx + m_s h_phi^2, the roll inertia about the roll center.
  double effective_roll_inertia() const noexcept { return I_xx + m_s * h_phi * h_phi; }

  void validate() const
  {
    const auto positive = [](double v, const char * name) {
      if (!std::isfinite(v) || v <= 0.0) {
        throw ConfigError(std::string("vehicle parameter '") + name + "' must be finite and > 0", name);
      }
    };
    positive(m_s, "m_s");
    positive(m_u, "m_u");
    positive(I_xx, "I_xx");
    positive(h_phi, "h_phi");
    positive(l_s, "l_s");
    positive(l_w, "l_w");
    positive(a, "a");
    positive(l, "l");
    positive(k_f, "k_f");
    positive(k_r, "k_r");
    positive(b_f, "b_f");
    positive(b_r, "b_r");
    positive(k_t, "k_t");
    if (!std::isfinite(K_u) || K_u < 0.0) {
      throw ConfigError("vehicle parameter 'K_u' must be finite and >= 0", "K_u");
    }
    positive(g, "g");
    if (a >= l) {
      throw ConfigError("vehicle parameter 'a' must be smaller than 'l'", "a");
    }
    if (h_phi >= l_s) {
      throw ConfigError("vehicle parameter 'h_phi' must be smaller than 'l_s'", "h_phi");
    }
  }
};

}  // namespace rollsim
