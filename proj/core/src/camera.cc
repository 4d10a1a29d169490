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

#include "bhg/camera.h"

#include <cmath>
#include <numbers>

#include "bhg/error.h"

namespace bhg::vision {

CameraModel CameraModel::overhead_default() {
  CameraModel cam;
  cam.camera_to_world = Eigen::Translation3d(0.0, 0.0, 800.0) *
                        Eigen::AngleAxisd(std::numbers::pi, Eigen::Vector3d::UnitX());
  return cam;
}

void CameraModel::validate() const {
  if (!(fx > 0.0) || !(fy > 0.0) || !std::isfinite(fx) || !std::isfinite(fy)) {
    throw Error(ErrorCode::kInvalidArgument, "focal lengths must be positive");
  }
  if (!(table_depth > 0.0) || !std::isfinite(table_depth)) {
    throw Error(ErrorCode::kInvalidArgument, "table_depth must be positive");
  }
  if (!(depth_sigma >= 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "depth_sigma must be >= 0");
  }
}

Eigen::Vector3d image_to_world(const Eigen::Vector2d& pixel, const CameraModel& cam) {
  cam.validate();
  const double d = cam.table_depth;
  const Eigen::Vector3d in_camera((pixel.x() - cam.cx) * d / cam.fx,
                                  (pixel.y() - cam.cy) * d / cam.fy, d);
  return cam.camera_to_world * in_camera;
}

Eigen::Vector2d world_to_image(const Eigen::Vector3d& world, const CameraModel& cam) {
  cam.validate();
  const Eigen::Vector3d p = cam.camera_to_world.inverse(Eigen::Isometry) * world;
  if (!(p.z() > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "point is not in front of the camera");
  }
  return {cam.fx * p.x() / p.z() + cam.cx, cam.fy * p.y() / p.z() + cam.cy};
}

}  // namespace bhg::vision
