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

#ifndef BHG_HOLDING_H_
#define BHG_HOLDING_H_

#include <span>
#include <vector>

namespace bhg::pneumatics {

// Locked antagonistic chamber pair on one joint. Chamber A expands and
// chamber B compresses as the angle increases; the locked gas behaves as
// an isothermal spring in parallel with the joint's passive stiffness.
// Torques in N*mm (kPa * mL), volumes in mL, pressures in kPa gauge.
struct HoldingModel {
  double chamber_volume = 20.0;  // each chamber at the held angle
  double lever = 16.6;           // mL of displacement per rad
  double pressure_a = 30.0;      // at lock time
  double pressure_b = 30.0;
  double joint_stiffness = 200.0;  // N*mm/rad
  double held_angle = 0.0;         // rad
  double atmosphere = 101.325;     // kPa

  // Throws InvalidArgument for non-physical values. Any pressure imbalance
  // at lock time is treated as preload held by the mechanism.
  void validate() const;
};

struct DisturbanceSample {
  double time = 0.0;    // s
  double torque = 0.0;  // N*mm, positive pushes the angle up
};

struct HoldingSample {
  double time = 0.0;
  double angle = 0.0;  // equilibrium angle, rad
  double pressure_a = 0.0;
  double pressure_b = 0.0;
};

// Quasi-static equilibrium angle of the locked joint at each disturbance
// sample. Gas inventories are fixed at lock time.
std::vector<HoldingSample> holding_recovery_test(
    std::span<const DisturbanceSample> disturbance, const HoldingModel& model);

// Equilibrium angle under a constant torque.
double holding_equilibrium(double torque, const HoldingModel& model);

// d(torque)/d(angle) at the held angle, gas spring plus joint stiffness.
double linearized_stiffness(const HoldingModel& model);

// Rectangular pulse helper: zero, `torque` on [t_on, t_off), zero, sampled
// every `dt` over [0, duration].
std::vector<DisturbanceSample> rectangular_pulse(double torque, double t_on,
                                                 double t_off, double duration,
                                                 double dt);

}  // namespace bhg::pneumatics

#endif  // BHG_HOLDING_H_
