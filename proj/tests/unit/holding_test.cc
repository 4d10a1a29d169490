// Copyright 2026 The BHG Toolkit Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "bhg/error.h"
#include "bhg/holding.h"

namespace bhg::pneumatics {
namespace {

double peak_deflection(const std::vector<HoldingSample>& trace, double held) {
  double peak = 0.0;
  for (const auto& s : trace) peak = std::max(peak, std::abs(s.angle - held));
  return peak;
}

TEST(Holding, ZeroDisturbanceIsFlat) {
  const HoldingModel m;
  const auto d = rectangular_pulse(0.0, 0.1, 0.2, 1.0, 0.01);
  const auto trace = holding_recovery_test(d, m);
  ASSERT_EQ(trace.size(), d.size());
  for (const auto& s : trace) {
    EXPECT_NEAR(s.angle, m.held_angle, 1e-12);
    EXPECT_NEAR(s.pressure_a, m.pressure_a, 1e-9);
    EXPECT_NEAR(s.pressure_b, m.pressure_b, 1e-9);
  }
}

TEST(Holding, PulseDeflectsThenReturns) {
  HoldingModel m;
  m.held_angle = 0.3;
  const auto d = rectangular_pulse(800.0, 0.2, 0.5, 1.0, 0.01);
  const auto trace = holding_recovery_test(d, m);
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i].torque > 0.0) {
      EXPECT_GT(trace[i].angle, m.held_angle);
      // Gas spring: the compressed side gains pressure.
      EXPECT_GT(trace[i].pressure_b, m.pressure_b);
      EXPECT_LT(trace[i].pressure_a, m.pressure_a);
    }
  }
  EXPECT_LT(std::abs(trace.back().angle - m.held_angle), 1e-6);
}

TEST(Holding, DoubledPulseDeflectsMoreAndStillReturns) {
  const HoldingModel m;
  const auto small = holding_recovery_test(rectangular_pulse(400, 0.1, 0.4, 0.8, 0.01), m);
  const auto big = holding_recovery_test(rectangular_pulse(800, 0.1, 0.4, 0.8, 0.01), m);
  EXPECT_GT(peak_deflection(big, m.held_angle), peak_deflection(small, m.held_angle));
  EXPECT_LT(std::abs(big.back().angle - small.back().angle), 1e-9);
}

TEST(Holding, SmallTorqueMatchesLinearizedSpring) {
  const HoldingModel m;
  const double k = linearized_stiffness(m);
  // Closed form for two isothermal gas springs plus the joint spring.
  const double pa = m.pressure_a + m.atmosphere, pb = m.pressure_b + m.atmosphere;
  EXPECT_NEAR(k, m.lever * m.lever * (pa + pb) / m.chamber_volume + m.joint_stiffness, 1e-9);
  for (double tau : {1.0, 5.0, -3.0}) {
    const double angle = holding_equilibrium(tau, m);
    EXPECT_NEAR(angle - m.held_angle, tau / k, 1e-3 * std::abs(tau / k));
  }
  // The gas spring stiffens: large torques deflect less than linear.
  const double large = 2000.0;
  EXPECT_LT(holding_equilibrium(large, m) - m.held_angle, large / k);
}

TEST(Holding, EquilibriumIsMonotoneInTorque) {
  const HoldingModel m;
  double prev = -1e9;
  for (double tau = -3000; tau <= 3000; tau += 250) {
    const double a = holding_equilibrium(tau, m);
    EXPECT_GT(a, prev);
    prev = a;
  }
}

TEST(Holding, RejectsProfileEndingUnderLoad) {
  std::vector<DisturbanceSample> d{{0.0, 0.0}, {0.1, 50.0}};
  EXPECT_THROW(holding_recovery_test(d, HoldingModel{}), Error);
}

TEST(Holding, RejectsNonPhysicalModel) {
  HoldingModel m;
  m.chamber_volume = 0.0;
  EXPECT_THROW(m.validate(), Error);
  m = HoldingModel{};
  m.pressure_a = -200.0;
  EXPECT_THROW(m.validate(), Error);
  m = HoldingModel{};
  m.joint_stiffness = -1.0;
  EXPECT_THROW(m.validate(), Error);
}

TEST(Holding, PulseShape) {
  const auto d = rectangular_pulse(10.0, 0.2, 0.4, 1.0, 0.1);
  ASSERT_EQ(d.size(), 11u);
  EXPECT_EQ(d[1].torque, 0.0);
  EXPECT_EQ(d[2].torque, 10.0);
  EXPECT_EQ(d[3].torque, 10.0);
  EXPECT_EQ(d.back().torque, 0.0);
}

}  // namespace
}  // namespace bhg::pneumatics
