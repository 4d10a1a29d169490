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

#ifndef BHG_SPHERE_CHAIN_H_
#define BHG_SPHERE_CHAIN_H_

#include <vector>

#include <Eigen/Geometry>

namespace bhg::model {

// One bellows as seen from the joint it spans. Anchors are the centers of
// the bellows end caps: lower_anchor in the joint's lower frame,
// upper_anchor in its upper (rotated) frame. mm.
struct BellowsGeometry {
  double radius = 15.25;
  Eigen::Vector3d lower_anchor = Eigen::Vector3d(-15.0, -16.0, 0.0);
  Eigen::Vector3d upper_anchor = Eigen::Vector3d(15.0, -16.0, 0.0);

  friend bool operator==(const BellowsGeometry&, const BellowsGeometry&) = default;
};

enum class Attachment { kLower, kUpper, kProportional };

struct SphereAttachment {
  Attachment kind = Attachment::kProportional;
  double fraction = 0.0;  // share of the joint angle; 0 lower, 1 upper
};

struct SphereChain {
  BellowsGeometry bellows;
  Eigen::Vector3d axis = Eigen::Vector3d::UnitZ();  // joint axis, unit
  std::vector<SphereAttachment> spheres;

  std::size_t size() const { return spheres.size(); }
  std::vector<double> fractions() const;
};

// n spheres; sphere i (0-based) gets fraction i / (n - 1). Throws
// InvalidArgument for n < 3, a non-positive radius or a zero axis.
SphereChain discretize_bellows(const BellowsGeometry& bellows,
                               const Eigen::Vector3d& joint_axis, int n = 5);

// Sphere centers in the lower joint frame: sphere at fraction f sits at
// the anchor interpolation rotated by f * joint_angle about the axis.
std::vector<Eigen::Vector3d> chain_centers(const SphereChain& chain, double joint_angle);

// World-frame centers. Throws Error(kConsistency) unless
// upper == lower * AngleAxis(joint_angle, axis) to within 1e-9.
std::vector<Eigen::Vector3d> pose_chain(const SphereChain& chain, double joint_angle,
                                        const Eigen::Isometry3d& lower,
                                        const Eigen::Isometry3d& upper);

}  // namespace bhg::model

#endif  // BHG_SPHERE_CHAIN_H_
