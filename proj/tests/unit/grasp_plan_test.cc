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

#include <cmath>
#include <numbers>
#include <variant>

#include <gtest/gtest.h>

#include "bhg/error.h"
#include "bhg/grasp_plan.h"
#include "fixtures.h"

namespace bhg::vision {
namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIo;
}

TEST(Plan, WaypointsFollowApproach) {
  const Eigen::Vector3d p(100, 50, 0);
  const auto plan = plan_poke_and_pinch(p, 45, 25, 0);
  ASSERT_EQ(plan.waypoints.size(), 2u);
  const double c = std::cos(std::numbers::pi / 4);
  const Eigen::Vector3d d(c, 0, -c);
  EXPECT_LT((plan.waypoints[0].approach - d).norm(), 1e-12);
  EXPECT_LT((plan.waypoints[0].position - (p - 60 * d)).norm(), 1e-9);
  EXPECT_LT((plan.waypoints[1].position - Eigen::Vector3d(100, 50, -25)).norm(), 1e-12);
  EXPECT_NEAR(plan.tolerance, 5.0, 1e-12);
}

TEST(Plan, ModeScheduleOpenPinchHold) {
  const auto plan = plan_poke_and_pinch({0, 0, 0}, 60, 20, 1.0);
  ASSERT_EQ(plan.mode_schedule.size(), 3u);
  EXPECT_EQ(plan.mode_schedule[0].label, "open");
  EXPECT_EQ(plan.mode_schedule[0].waypoint, 0u);
  EXPECT_TRUE(std::holds_alternative<pneumatics::AbAdMode>(plan.mode_schedule[1].command));
  EXPECT_EQ(plan.mode_schedule[1].waypoint, 1u);
  EXPECT_TRUE(std::holds_alternative<pneumatics::HoldingMode>(plan.mode_schedule[2].command));
}

TEST(Plan, MarginBeyondToleranceRejected) {
  // 15 deg gives 3 mm; 4 mm of camera error cannot be absorbed.
  EXPECT_EQ(code_of([] { plan_poke_and_pinch({0, 0, 0}, 15, 25, 4.0); }),
            ErrorCode::kToleranceExceeded);
  EXPECT_NO_THROW(plan_poke_and_pinch({0, 0, 0}, 45, 25, 4.0));
}

TEST(Plan, OverpressOutsideRange) {
  EXPECT_EQ(code_of([] { plan_poke_and_pinch({0, 0, 0}, 45, 35, 0); }),
            ErrorCode::kInvalidArgument);
  PlanOptions opt;
  opt.enforce_overpress_range = false;
  EXPECT_NO_THROW(plan_poke_and_pinch({0, 0, 0}, 45, 35, 0, opt));
  EXPECT_EQ(code_of([&] { plan_poke_and_pinch({0, 0, 0}, 45, -1, 0, opt); }),
            ErrorCode::kInvalidArgument);
}

TEST(Plan, JsonKeysInOrder) {
  const auto j = to_json(plan_poke_and_pinch({1, 2, 3}, 30, 25, 0));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"grasp_point_mm", "approach_angle_deg",
                                            "overpress_depth_mm", "poke_tolerance_mm",
                                            "error_margin_mm", "waypoints", "mode_schedule"}));
}

TEST(Detect, TowelWithDistractor) {
  const fixtures::TowelSpec spec;
  auto img = fixtures::render_towel(spec);
  fixtures::draw_disc(img, {80, 400}, 12, spec.fill);
  const auto cam = CameraModel::overhead_default();
  const auto det = detect_grasp_points(img, DetectionOptions{}, cam);
  EXPECT_GT(det.mask_pixels, det.roi_pixels);
  const Eigen::Vector2d u(std::cos(spec.angle), std::sin(spec.angle));
  EXPECT_LT((det.midpoints[0] - (spec.center - 150 * u)).norm(), 1.0);
  EXPECT_LT((det.grasp_pixels[0] - (spec.center - 135 * u)).norm(), 1.0);
  for (int i = 0; i < 2; ++i) {
    EXPECT_LT((world_to_image(det.grasp_world[i], cam) - det.grasp_pixels[i]).norm(), 1e-9);
  }
}

TEST(Detect, BlankImageHasNoObject) {
  const auto img = RgbImage::filled(32, 32, {200, 190, 170});
  EXPECT_EQ(code_of([&] { detect_grasp_points(img, {}, CameraModel::overhead_default()); }),
            ErrorCode::kNoObject);
}

}  // namespace
}  // namespace bhg::vision
