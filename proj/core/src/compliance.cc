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

#include "bhg/compliance.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhg/error.h"

namespace bhg::compliance {

void StiffnessModel::validate() const {
  if (!(k_lateral > 0.0) || !std::isfinite(k_lateral) ||
      !(k_structural > k_lateral) || std::isnan(k_structural)) {
    throw Error(ErrorCode::kInvalidArgument,
                "stiffness model requires k_structural > k_lateral > 0");
  }
  if (!(deflection_limit > 0.0) || !std::isfinite(deflection_limit)) {
    throw Error(ErrorCode::kInvalidArgument, "deflection_limit must be positive");
  }
}

std::string_view ends_name(CompliantEnds ends) {
  switch (ends) {
    case CompliantEnds::kBoth: return "both";
    case CompliantEnds::kPullingOnly: return "pulling-only";
    case CompliantEnds::kReceivingOnly: return "receiving-only";
    case CompliantEnds::kNeither: return "neither";
  }
  return "unknown";
}

int compliant_count(CompliantEnds ends) {
  switch (ends) {
    case CompliantEnds::kBoth: return 2;
    case CompliantEnds::kPullingOnly:
    case CompliantEnds::kReceivingOnly: return 1;
    case CompliantEnds::kNeither: return 0;
  }
  return 0;
}

double effective_stiffness(CompliantEnds ends, const StiffnessModel& model) {
  model.validate();
  const double compliance =
      compliant_count(ends) / model.k_lateral + 1.0 / model.k_structural;
  return 1.0 / compliance;
}

std::vector<ForcePoint> closed_chain_force(const ClosedChainScenario& scenario,
                                           const StiffnessModel& model) {
  if (!(scenario.displacement_error >= 0.0) || !(scenario.step > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "displacement_error must be >= 0 and step > 0");
  }
  const double k = effective_stiffness(scenario.ends, model);
  const double end = scenario.displacement_error;
  const auto n = static_cast<std::size_t>(std::ceil(end / scenario.step - 1e-9));
  std::vector<ForcePoint> curve;
  curve.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double d = std::min(static_cast<double>(i) * scenario.step, end);
    curve.push_back({d, k * d});
  }
  return curve;
}

double payload_envelope(bool lateral_dof_enabled, const StiffnessModel& model,
                        const GraspParams& grasp) {
  model.validate();
  if (!(grasp.friction >= 0.0) || !(grasp.normal_force >= 0.0) ||
      !std::isfinite(grasp.friction) || !std::isfinite(grasp.normal_force) ||
      !std::isfinite(grasp.wrap_gain)) {
    throw Error(ErrorCode::kInvalidArgument, "grasp parameters must be finite and >= 0");
  }
  const double base = grasp.friction * grasp.normal_force;
  if (!lateral_dof_enabled) return base;
  const double deflection =
      std::min(base / model.k_lateral, model.deflection_limit);
  const double engagement = deflection / model.deflection_limit;
  return base * (1.0 + (grasp.wrap_gain - 1.0) * engagement);
}

double poke_tolerance(double angle_deg, const StiffnessModel& model,
                      const PokeParams& poke) {
  if (!(angle_deg > 0.0 && angle_deg <= 90.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "approach angle must lie in (0, 90] degrees");
  }
  model.validate();
  const double a = angle_deg * std::numbers::pi / 180.0;
  return model.deflection_limit * std::sin(a) * std::cos(a) * poke.scale + poke.floor;
}

}  // namespace bhg::compliance
