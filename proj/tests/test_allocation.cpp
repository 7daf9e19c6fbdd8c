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


#include <gtest/gtest.h>

#include <Eigen/SVD>
#include <random>

#include "rollsim/allocation.hpp"

namespace rollsim
{
namespace
{

TEST(Allocation, ZeroCommandGivesZeroForces)
{
  const AllocationResult r = allocate_forces(VehicleParams{}, 0.0, 0.0, 0.0, 4000.0);
  for (double f : r.forces.values) EXPECT_EQ(f, 0.0);
  EXPECT_FALSE(r.any_saturated());
}

TEST(Allocation, UnitRollMatchesOracle)
{
  // frozen from the exact pseudo-inverse in tests/oracles/roll_model_oracle.py
  const CornerForces f = ForceAllocator(VehicleParams{}).solve(0.0, 0.0, 1.0);
  const double e[4] = {0.38461538461538461538, -0.38461538461538461538, 0.38461538461538461538,
                       -0.38461538461538461538};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(f.values[i], e[i], 1e-15);
}

TEST(Allocation, MixedCommandMatchesOracle)
{
  const CornerForces f = ForceAllocator(VehicleParams{}).solve(120.0, -35.0, 800.0);
  const double e[4] = {270.08361204013377926, -345.30100334448160535, 285.30100334448160535,
                       -330.08361204013377926};
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(f.values[i], e[i], 1e-12 * std::abs(e[i]));
}

TEST(Allocation, PseudoInverseAgreesWithSvd)
{
  VehicleParams p;
  p.a = 1.3;
  p.l = 2.7;
  p.l_s = 1.55;
  const ForceAllocator alloc(p);
  const Eigen::MatrixXd A = alloc.matrix();
  const Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
  const Eigen::VectorXd s = svd.singularValues();
  const Eigen::MatrixXd pinv = svd.matrixV() * s.cwiseInverse().asDiagonal() * svd.matrixU().transpose();
  EXPECT_LE((pinv - alloc.pseudo_inverse()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(Allocation, ReconstructionAndMinimumNorm)
{
  const VehicleParams p;
  const ForceAllocator alloc(p);
  const Eigen::Matrix<double, 3, 4> A = alloc.matrix();
  const Eigen::Matrix4d null_proj = Eigen::Matrix4d::Identity() - alloc.pseudo_inverse() * A;
  std::mt19937_64 rng(41);
  std::normal_distribution<double> n(0.0, 500.0);
  for (int k = 0; k < 200; ++k) {
    const Eigen::Vector3d u(n(rng), n(rng), n(rng));
    const CornerForces cf = alloc.solve(u[0], u[1], u[2]);
    const Eigen::Vector4d f(cf.values.data());
    EXPECT_LE((A * f - u).norm(), 1e-12 * u.norm());
    for (int j = 0; j < 20; ++j) {
      const Eigen::Vector4d z = null_proj * Eigen::Vector4d(n(rng), n(rng), n(rng), n(rng));
      EXPECT_LE(f.norm(), (f + z).norm() + 1e-9);
    }
  }
}

TEST(Allocation, SaturationClampsAndFlags)
{
  const ForceAllocator alloc(VehicleParams{});
  // 2600 N m of roll needs 1000 N per corner
  const AllocationResult free = alloc.allocate(0.0, 0.0, 2600.0, 4000.0);
  EXPECT_FALSE(free.any_saturated());
  const AllocationResult r = alloc.allocate(0.0, 0.0, 2600.0, 600.0);
  EXPECT_TRUE(r.any_saturated());
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_TRUE(r.saturated[i]);
    EXPECT_DOUBLE_EQ(std::abs(r.forces.values[i]), 600.0);
    EXPECT_EQ(std::signbit(r.forces.values[i]), std::signbit(free.forces.values[i]));
  }
  // heave offset saturates only the corners pushed past the limit
  const AllocationResult mixed = alloc.allocate(-2000.0, 0.0, 2600.0, 1200.0);
  EXPECT_TRUE(mixed.saturated[0]);
  EXPECT_FALSE(mixed.saturated[1]);
}

TEST(Allocation, DegenerateGeometryIsConfigError)
{
  VehicleParams p;
  p.l_s = 0.0;
  EXPECT_THROW(ForceAllocator{p}, ConfigError);
  p = {};
  p.l = 0.0;  // pitch row collapses onto the heave row
  EXPECT_THROW(ForceAllocator{p}, ConfigError);
}

}  // namespace
}  // namespace rollsim
