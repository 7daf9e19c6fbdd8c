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

#include <Eigen/Dense>

#include <array>
#include <cmath>

#include "rollsim/errors.hpp"
#include "rollsim/roll_state.hpp"
#include "rollsim/vehicle_params.hpp"

namespace rollsim
{

using AllocationMatrix = Eigen::Matrix<double, 3, 4>;
using PseudoInverse = Eigen::Matrix<double, 4, 3>;

/// Maps corner forces to [u_z, u_theta, u_phi] (heave, pitch, roll commands).
inline AllocationMatrix allocation_matrix(const VehicleParams & p)
{
  const double a = p.a;
  const double l = p.l;
  const double h = 0.5 * p.l_s;
  AllocationMatrix A;
  // clang-format off
  A << -1.0, -1.0, -1.0,  -1.0,
          a,    a,  a - l, a - l,
          h,   -h,  h,    -h;
  // clang-format on
  return A;
}

struct AllocationResult
{
  CornerForces forces;
  std::array<bool, 4> saturated{};

  bool any_saturated() const { return saturated[0] || saturated[1] || saturated[2] || saturated[3]; }
};

/// Minimum-norm distribution of body commands to the four corner actuators through
/// the right pseudo-inverse A^T (A A^T)^{-1}.
class ForceAllocator
{
public:
  explicit ForceAllocator(const VehicleParams & p) : A_(allocation_matrix(p))
  {
    const Eigen::Matrix3d gram = A_ * A_.transpose();
    const Eigen::LDLT<Eigen::Matrix3d> ldlt(gram);
    const Eigen::Vector3d d = ldlt.vectorD();
    const double scale = gram.diagonal().maxCoeff();
    if (ldlt.info() != Eigen::Success || !(d.minCoeff() > 1e-12 * scale)) {
      throw ConfigError("allocation matrix is rank deficient (check a, l, l_s)", "l_s");
    }
    pinv_ = A_.transpose() * ldlt.solve(Eigen::Matrix3d::Identity());
  }

  const AllocationMatrix & matrix() const noexcept { return A_; }
  const PseudoInverse & pseudo_inverse() const noexcept { return pinv_; }

  /// Exact minimum-norm solution of A F = u, no saturation.
  CornerForces solve(double u_z, double u_theta, double u_phi) const
  {
    const Eigen::Vector4d f = pinv_ * Eigen::Vector3d(u_z, u_theta, u_phi);
    return CornerForces{{f[0], f[1], f[2], f[3]}};
  }

  AllocationResult allocate(double u_z, double u_theta, double u_phi, double force_limit) const
  {
    AllocationResult r{solve(u_z, u_theta, u_phi), {}};
    for (std::size_t i = 0; i < 4; ++i) {
      double & f = r.forces.values[i];
      if (std::abs(f) > force_limit) {
        f = std::copysign(force_limit, f);
        r.saturated[i] = true;
      }
    }
    return r;
  }

private:
  AllocationMatrix A_;
  PseudoInverse pinv_;
};

inline AllocationResult allocate_forces(
  const VehicleParams & p, double u_z, double u_theta, double u_phi, double force_limit)
{
  return ForceAllocator(p).allocate(u_z, u_theta, u_phi, force_limit);
}

}  // namespace rollsim
