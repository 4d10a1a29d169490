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

#ifndef BHG_CAMERA_H_
#define BHG_CAMERA_H_

#include <Eigen/Geometry>

namespace bhg::vision {

// Pinhole camera looking at a table plane at a known depth. World frame:
// z up from the table.
struct CameraModel {
  double fx = 600.0;
  double fy = 600.0;
  double cx = 320.0;
  double cy = 240.0;
  Eigen::Isometry3d camera_to_world = Eigen::Isometry3d::Identity();
  double table_depth = 800.0;  // mm along the optical axis
  double depth_sigma = 11.0;   // mm

  // Camera 800 mm above the table, optical axis pointing down.
  static CameraModel overhead_default();
  void validate() const;
};

// Back-projects pixel (u, v) onto the table plane and maps it to world
// coordinates (mm).
Eigen::Vector3d image_to_world(const Eigen::Vector2d& pixel, const CameraModel& cam);

// Pinhole projection of a world point. Throws InvalidArgument for points
// at or behind the camera plane.
Eigen::Vector2d world_to_image(const Eigen::Vector3d& world, const CameraModel& cam);

}  // namespace bhg::vision

#endif  // BHG_CAMERA_H_
