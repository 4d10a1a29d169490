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

#ifndef BHG_GRASP_PLAN_H_
#define BHG_GRASP_PLAN_H_

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include "bhg/camera.h"
#include "bhg/compliance.h"
#include "bhg/control.h"
#include "bhg/image.h"
#include "bhg/vision.h"

namespace bhg::vision {

struct Waypoint {
  std::string label;
  Eigen::Vector3d position = Eigen::Vector3d::Zero();  // mm, world
  Eigen::Vector3d approach = Eigen::Vector3d::Zero();  // unit, toward the surface
};

struct ScheduledMode {
  std::size_t waypoint = 0;  // index the mode switch is issued at
  std::string label;
  pneumatics::ModeCommand command;
};

struct GraspPlan {
  Eigen::Vector3d grasp_point = Eigen::Vector3d::Zero();  // mm
  double approach_angle = 45.0;   // deg from the surface plane
  double overpress_depth = 25.0;  // mm
  double tolerance = 0.0;         // poke tolerance at approach_angle, mm
  double error_margin = 0.0;      // mm
  std::vector<Waypoint> waypoints;
  std::vector<ScheduledMode> mode_schedule;
};

struct PlanOptions {
  double standoff = 60.0;     // mm back along the approach direction
  double azimuth_deg = 0.0;   // approach heading in the table plane
  kinematics::JointAngles open{0.0, 0.0, 0.0};
  kinematics::JointAngles pinch{0.6, 0.3, 0.0};
  bool enforce_overpress_range = true;  // [20, 30] mm
  compliance::StiffnessModel stiffness;
  compliance::PokeParams poke;
};

// Pre-grasp above the point inclined by the approach angle, then a target
// `overpress` mm beneath it. Mode schedule: Ab/Ad open at pre-grasp, Ab/Ad
// pinch after contact, Holding for the lift.
//
// Throws InvalidArgument for out-of-range angle or overpress, and
// Error(kToleranceExceeded) when cam_error_margin exceeds the poke
// tolerance at this angle.
GraspPlan plan_poke_and_pinch(const Eigen::Vector3d& world_point,
                              double approach_angle_deg, double overpress,
                              double cam_error_margin,
                              const PlanOptions& options = {});

nlohmann::ordered_json to_json(const GraspPlan& plan);

struct DetectionOptions {
  HsvRange hsv;
  EdgeOptions edges;
  double inset_px = 15.0;
};

struct Detection {
  std::size_t mask_pixels = 0;
  std::size_t roi_pixels = 0;
  std::size_t edge_pixels = 0;
  RotatedRect rect;
  std::array<Eigen::Vector2d, 2> midpoints;
  std::array<Eigen::Vector2d, 2> grasp_pixels;  // after inset
  std::array<Eigen::Vector3d, 2> grasp_world;   // mm
};

// mask -> largest component -> edges -> enclosing rectangle -> midpoints
// -> inset -> table-plane back-projection.
Detection detect_grasp_points(const RgbImage& img, const DetectionOptions& options,
                              const CameraModel& cam);

nlohmann::ordered_json to_json(const Detection& det);

}  // namespace bhg::vision

#endif  // BHG_GRASP_PLAN_H_
