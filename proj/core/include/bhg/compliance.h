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

#ifndef BHG_COMPLIANCE_H_
#define BHG_COMPLIANCE_H_

#include <array>
#include <string_view>
#include <vector>

namespace bhg::compliance {

// Tip-referred lumped stiffnesses (N/mm). k_structural may be +inf.
struct StiffnessModel {
  double k_lateral = 0.4;
  double k_structural = 3.6;
  double deflection_limit = 8.0;  // mm

  // Throws InvalidArgument unless k_structural > k_lateral > 0 and
  // deflection_limit > 0.
  void validate() const;
  friend bool operator==(const StiffnessModel&, const StiffnessModel&) = default;
};

enum class CompliantEnds { kBoth, kPullingOnly, kReceivingOnly, kNeither };

std::string_view ends_name(CompliantEnds ends);
int compliant_count(CompliantEnds ends);

struct ClosedChainScenario {
  double displacement_error = 10.0;  // mm
  CompliantEnds ends = CompliantEnds::kBoth;
  double step = 0.5;  // mm between curve samples
};

struct ForcePoint {
  double displacement = 0.0;  // mm
  double force = 0.0;         // N
};

// Series springs: 1/k_eff = n/k_lateral + 1/k_structural with n compliant
// ends.
double effective_stiffness(CompliantEnds ends, const StiffnessModel& model);

// Force over [0, displacement_error] in `step` increments; the last sample
// is always at displacement_error.
std::vector<ForcePoint> closed_chain_force(const ClosedChainScenario& scenario,
                                           const StiffnessModel& model);

// Wrap-friction pull-out model.
struct GraspParams {
  double friction = 0.8;
  double normal_force = 69.07;  // N
  // Contact multiplier once the finger has deflected fully onto the load.
  double wrap_gain = 1.873;

  friend bool operator==(const GraspParams&, const GraspParams&) = default;
};

// Peak pull-out force (N). Without the lateral DOF the force is
// friction * normal_force. With it, the finger deflects toward the load by
// min(F / k_lateral, deflection_limit) and the contact multiplier grows
// linearly to wrap_gain at the deflection limit.
double payload_envelope(bool lateral_dof_enabled, const StiffnessModel& model,
                        const GraspParams& grasp);

struct PokeParams {
  double scale = 1.0;
  double floor = 1.0;  // mm

  friend bool operator==(const PokeParams&, const PokeParams&) = default;
};

inline constexpr std::array<double, 5> kApproachGridDeg{15.0, 30.0, 45.0, 60.0, 90.0};

// Max tolerated vertical over-press error (mm) at an approach angle in
// (0, 90] degrees: deflection_limit * sin(a) * cos(a) * scale + floor.
double poke_tolerance(double angle_deg, const StiffnessModel& model,
                      const PokeParams& poke);

}  // namespace bhg::compliance

#endif  // BHG_COMPLIANCE_H_
