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

#include "bhg/grasp_plan.h"

#include <cmath>
#include <numbers>

#include "bhg/error.h"

namespace bhg::vision {
namespace {

using nlohmann::ordered_json;

ordered_json vec_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }
ordered_json vec_json(const Eigen::Vector2d& v) { return {v.x(), v.y()}; }

ordered_json angles_json(const kinematics::JointAngles& a) {
  ordered_json j;
  j["theta1_rad"] = a.theta1;
  j["theta2_rad"] = a.theta2;
  j["phi_rad"] = a.phi;
  return j;
}

ordered_json mode_json(const pneumatics::ModeCommand& cmd) {
  ordered_json j;
  j["mode"] = std::string(pneumatics::mode_name(cmd));
  if (const auto* p = std::get_if<pneumatics::PowerMode>(&cmd)) {
    j["target_kPa"] = p->target_kpa;
  } else if (const auto* a = std::get_if<pneumatics::AbAdMode>(&cmd)) {
    j["finger_a"] = angles_json(a->fingers[0]);
    j["finger_b"] = angles_json(a->fingers[1]);
  }
  return j;
}

}  // namespace

GraspPlan plan_poke_and_pinch(const Eigen::Vector3d& world_point,
                              double approach_angle_deg, double overpress,
                              double cam_error_margin, const PlanOptions& options) {
  if (!world_point.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "grasp point must be finite");
  }
  if (!(overpress > 0.0) || !std::isfinite(overpress)) {
    throw Error(ErrorCode::kInvalidArgument, "overpress depth must be positive");
  }
  if (options.enforce_overpress_range && (overpress < 20.0 || overpress > 30.0)) {
    throw Error(ErrorCode::kInvalidArgument, "overpress depth must lie in [20, 30] mm");
  }
  if (!(cam_error_margin >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "error margin must be >= 0");
  }
  GraspPlan plan;
  plan.grasp_point = world_point;
  plan.approach_angle = approach_angle_deg;
  plan.overpress_depth = overpress;
  plan.error_margin = cam_error_margin;
  plan.tolerance =
      compliance::poke_tolerance(approach_angle_deg, options.stiffness, options.poke);
  if (cam_error_margin > plan.tolerance) {
    throw Error(ErrorCode::kToleranceExceeded,
                "vertical error margin " + std::to_string(cam_error_margin) +
                    " mm exceeds poke tolerance " + std::to_string(plan.tolerance) +
                    " mm at " + std::to_string(approach_angle_deg) + " deg");
  }

  constexpr double deg = std::numbers::pi / 180.0;
  const double a = approach_angle_deg * deg;
  const double az = options.azimuth_deg * deg;
  const Eigen::Vector3d approach(std::cos(a) * std::cos(az), std::cos(a) * std::sin(az),
                                 -std::sin(a));
  plan.waypoints.push_back({"pre-grasp", world_point - options.standoff * approach, approach});
  plan.waypoints.push_back(
      {"poke", world_point - Eigen::Vector3d(0.0, 0.0, overpress), approach});

  using pneumatics::AbAdMode;
  using pneumatics::HoldingMode;
  plan.mode_schedule.push_back({0, "open", AbAdMode::both(options.open)});
  plan.mode_schedule.push_back({1, "pinch", AbAdMode::both(options.pinch)});
  plan.mode_schedule.push_back({1, "hold-and-lift", HoldingMode{}});
  return plan;
}

nlohmann::ordered_json to_json(const GraspPlan& plan) {
  ordered_json j;
  j["grasp_point_mm"] = vec_json(plan.grasp_point);
  j["approach_angle_deg"] = plan.approach_angle;
  j["overpress_depth_mm"] = plan.overpress_depth;
  j["poke_tolerance_mm"] = plan.tolerance;
  j["error_margin_mm"] = plan.error_margin;
  ordered_json wps = ordered_json::array();
  for (const auto& w : plan.waypoints) {
    ordered_json wj;
    wj["label"] = w.label;
    wj["position_mm"] = vec_json(w.position);
    wj["approach"] = vec_json(w.approach);
    wps.push_back(wj);
  }
  j["waypoints"] = wps;
  ordered_json modes = ordered_json::array();
  for (const auto& m : plan.mode_schedule) {
    ordered_json mj;
    mj["waypoint"] = m.waypoint;
    mj["label"] = m.label;
    mj["command"] = mode_json(m.command);
    modes.push_back(mj);
  }
  j["mode_schedule"] = modes;
  return j;
}

Detection detect_grasp_points(const RgbImage& img, const DetectionOptions& options,
                              const CameraModel& cam) {
  options.hsv.validate();
  const BinaryMask mask = extract_mask(img, options.hsv);
  const PixelSet roi = segment_roi(mask);
  const PixelSet edges = detect_edges(roi, options.edges);
  if (edges.empty()) throw Error(ErrorCode::kNoObject, "no edges found in ROI");

  Detection det;
  det.mask_pixels = mask.count();
  det.roi_pixels = roi.size();
  det.edge_pixels = edges.size();
  det.rect = min_enclosing_rect(edges);
  det.midpoints = grasp_midpoints(det.rect);
  det.grasp_pixels = inset_grasp_points(det.rect, options.inset_px);
  for (std::size_t i = 0; i < 2; ++i) {
    det.grasp_world[i] = image_to_world(det.grasp_pixels[i], cam);
  }
  return det;
}

nlohmann::ordered_json to_json(const Detection& det) {
  ordered_json j;
  j["mask_pixels"] = det.mask_pixels;
  j["roi_pixels"] = det.roi_pixels;
  j["edge_pixels"] = det.edge_pixels;
  ordered_json r;
  r["center_px"] = vec_json(det.rect.center);
  r["half_extents_px"] = vec_json(det.rect.half_extents);
  r["orientation_deg"] = det.rect.orientation * 180.0 / std::numbers::pi;
  j["rect"] = r;
  j["midpoints_px"] = {vec_json(det.midpoints[0]), vec_json(det.midpoints[1])};
  j["grasp_px"] = {vec_json(det.grasp_pixels[0]), vec_json(det.grasp_pixels[1])};
  j["grasp_world_mm"] = {vec_json(det.grasp_world[0]), vec_json(det.grasp_world[1])};
  return j;
}

}  // namespace bhg::vision
