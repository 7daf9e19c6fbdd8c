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

#include <string>
#include <string_view>

#include "rollsim/errors.hpp"

namespace rollsim
{

enum class Integrator { rk4, euler };

inline Integrator parse_integrator(std::string_view name)
{
  if (name == "rk4") return Integrator::rk4;
  if (name == "euler") return Integrator::euler;
  throw ConfigError("unknown integrator '" + std::string(name) + "'", "integrator");
}

inline std::string_view to_string(Integrator i) { return i == Integrator::rk4 ? "rk4" : "euler"; }

// State must support `State + State` and `double * State`; f(t, x) returns dx/dt.

template <class State, class Deriv>
State euler_step(const State & x, double t, double dt, Deriv && f)
{
  return x + dt * f(t, x);
}

/// Classical fourth-order Runge-Kutta step.
template <class State, class Deriv>
State rk4_step(const State & x, double t, double dt, Deriv && f)
{
  const State k1 = f(t, x);
  const State k2 = f(t + 0.5 * dt, x + (0.5 * dt) * k1);
  const State k3 = f(t + 0.5 * dt, x + (0.5 * dt) * k2);
  const State k4 = f(t + dt, x + dt * k3);
  return x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

template <class State, class Deriv>
State integrate_step(Integrator scheme, const State & x, double t, double dt, Deriv && f)
{
  return scheme == Integrator::rk4 ? rk4_step(x, t, dt, f) : euler_step(x, t, dt, f);
}

}  // namespace rollsim
