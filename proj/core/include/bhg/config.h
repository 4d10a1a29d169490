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

#ifndef BHG_CONFIG_H_
#define BHG_CONFIG_H_

#include <filesystem>
#include <string_view>

#include <nlohmann/json.hpp>

#include "bhg/camera.h"
#include "bhg/compliance.h"
#include "bhg/control.h"
#include "bhg/grasp_plan.h"
#include "bhg/gripper_description.h"
#include "bhg/holding.h"
#include "bhg/pneumatics.h"
#include "bhg/pressure_map.h"
#include "bhg/tracking.h"
#include "bhg/vision.h"

namespace bhg::config {

// Everything a command-line run can be configured with. Angles are
// stored in radians; the JSON form uses degrees where the key says so.
struct ToolkitConfig {
  model::GripperModel gripper = model::GripperModel::defaults();
  pressure::PressureMaps maps;
  double lateral_bias = pressure::kDefaultLateralBias;
  pneumatics::PlantParams plant;
  pneumatics::ControllerConfig controller;
  pneumatics::ScheduleSpec schedule;
  pneumatics::HoldingModel holding;
  compliance::StiffnessModel stiffness;
  compliance::GraspParams grasp;
  compliance::PokeParams poke;
  vision::CameraModel camera = vision::CameraModel::overhead_default();
  vision::DetectionOptions detection;
  vision::PlanOptions plan;  // stiffness/poke are taken from the fields above

  const kinematics::LinkGeometry& finger(std::size_t i) const { return gripper.fingers[i]; }
  const kinematics::JointLimits& limits() const { return gripper.limits; }
  vision::PlanOptions plan_options() const;

  // Runs every module's validation. Throws Error(kConfig) naming the
  // section that failed.
  void validate() const;
};

// Missing keys keep their defaults; unknown keys are rejected. Throws
// Error(kConfig).
ToolkitConfig from_json(const nlohmann::json& j);
ToolkitConfig parse_config(std::string_view text);
ToolkitConfig load_config(const std::filesystem::path& path);

nlohmann::ordered_json to_json(const ToolkitConfig& cfg);

}  // namespace bhg::config

#endif  // BHG_CONFIG_H_
