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

namespace rollsim
{

inline constexpr double kDefaultTiltBlend = 0.02;

/// One step of the complementary roll-angle filter: integrate the gyro rate and blend
/// toward an absolute tilt reference with weight `blend` per step.
inline double estimate_roll_angle(
  double phi_dot_measured, double phi_prev, double dt, double accel_tilt_ref,
  double blend = kDefaultTiltBlend)
{
  return (1.0 - blend) * (phi_prev + phi_dot_measured * dt) + blend * accel_tilt_ref;
}

class RollAngleEstimator
{
public:
  explicit RollAngleEstimator(double blend = kDefaultTiltBlend, double initial = 0.0)
  : blend_(blend), phi_(initial)
  {
  }

  double update(double phi_dot_measured, double dt, double accel_tilt_ref)
  {
    phi_ = estimate_roll_angle(phi_dot_measured, phi_, dt, accel_tilt_ref, blend_);
    return phi_;
  }

  double value() const noexcept { return phi_; }

private:
  double blend_;
  double phi_;
};

}  // namespace rollsim
