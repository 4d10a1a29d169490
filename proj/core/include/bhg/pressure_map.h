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

#ifndef BHG_PRESSURE_MAP_H_
#define BHG_PRESSURE_MAP_H_

#include <span>
#include <vector>

#include "bhg/kinematics.h"

namespace bhg::pressure {

// Gauge pressures of one finger's four actuators (kPa): p0 distal,
// p1 left lateral, p2 middle root, p3 right lateral.
struct PressureVector {
  double p0 = 0.0;
  double p1 = 0.0;
  double p2 = 0.0;
  double p3 = 0.0;

  double lateral_difference() const { return p1 - p3; }
  friend bool operator==(const PressureVector&, const PressureVector&) = default;
};

// angle = k * pressure + b, with k in rad/kPa and b in rad.
struct LinearMap {
  double k = 0.0;
  double b = 0.0;

  double operator()(double pressure) const { return k * pressure + b; }
  // Throws InvalidArgument when k is zero or non-finite.
  double inverse(double angle) const;
  friend bool operator==(const LinearMap&, const LinearMap&) = default;
};

// The three decoupled channel maps of one finger plus the supply limit.
//   theta1 = distal(p0), theta2 = root(p2), phi = lateral(p1 - p3)
struct PressureMaps {
  LinearMap distal{0.025, 0.0};
  LinearMap root{0.02, 0.0};
  LinearMap lateral{0.01, 0.0};
  double p_max = 60.0;  // kPa

  friend bool operator==(const PressureMaps&, const PressureMaps&) = default;
};

inline constexpr double kDefaultLateralBias = 30.0;  // kPa

struct CalibrationSample {
  double pressure = 0.0;  // kPa, or p1 - p3 for the lateral channel
  double angle = 0.0;     // rad
};

struct LinearFit {
  LinearMap map;
  double rmse = 0.0;  // rad
};

// Throws InvalidArgument if any pressure lies outside [0, p_max].
kinematics::JointAngles angles_from_pressures(const PressureVector& p,
                                              const PressureMaps& maps);

// Inverse of angles_from_pressures. The lateral difference is split
// symmetrically about `lateral_bias`. Throws Saturation if a required
// pressure falls outside [0, p_max].
PressureVector pressures_from_angles(const kinematics::JointAngles& a,
                                     const PressureMaps& maps,
                                     double lateral_bias = kDefaultLateralBias);

// Ordinary least squares fit of angle = k * pressure + b.
LinearFit fit_linear_map(std::span<const CalibrationSample> samples);

kinematics::TipPosition fk_from_pressures(const PressureVector& p,
                                          const PressureMaps& maps,
                                          const kinematics::LinkGeometry& geom);

}  // namespace bhg::pressure

#endif  // BHG_PRESSURE_MAP_H_
