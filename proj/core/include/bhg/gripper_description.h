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

#ifndef BHG_GRIPPER_DESCRIPTION_H_
#define BHG_GRIPPER_DESCRIPTION_H_

#include <array>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bhg/kinematics.h"
#include "bhg/sphere_chain.h"

namespace bhg::model {

// Robot-description tree in the units of the exported document (m, rad).

struct SphereVisual {
  std::string name;
  Eigen::Vector3d xyz = Eigen::Vector3d::Zero();  // in the owning link frame
  double radius = 0.0;

  friend bool operator==(const SphereVisual&, const SphereVisual&) = default;
};

struct Link {
  std::string name;
  std::vector<SphereVisual> spheres;

  friend bool operator==(const Link&, const Link&) = default;
};

enum class JointType { kRevolute, kFixed };

struct Joint {
  std::string name;
  JointType type = JointType::kRevolute;
  std::string parent;
  std::string child;
  Eigen::Vector3d xyz = Eigen::Vector3d::Zero();
  Eigen::Vector3d rpy = Eigen::Vector3d::Zero();  // fixed-axis roll, pitch, yaw
  Eigen::Vector3d axis = Eigen::Vector3d::UnitX();
  double lower = 0.0;  // revolute only
  double upper = 0.0;
  double effort = 0.0;
  double velocity = 0.0;
  double position = 0.0;  // snapshot angle the sphere visuals were posed at

  friend bool operator==(const Joint&, const Joint&) = default;
};

// Which joint a bellows chain spans and where its spheres are attached.
struct ChainRecord {
  std::string name;
  std::string joint;
  std::string link;
  int chamber = 0;
  int spheres = 0;
  double radius = 0.0;

  friend bool operator==(const ChainRecord&, const ChainRecord&) = default;
};

struct GripperDescription {
  std::string name = "bellows_hybrid_gripper";
  std::vector<Link> links;
  std::vector<Joint> joints;
  std::vector<ChainRecord> chains;

  const Link* find_link(const std::string& n) const;
  const Joint* find_joint(const std::string& n) const;
  std::size_t sphere_count() const;

  friend bool operator==(const GripperDescription&, const GripperDescription&) = default;
};

// Chamber k of each finger: 0 distal, 1 left lateral, 2 middle root,
// 3 right lateral.
struct GripperModel {
  std::array<kinematics::LinkGeometry, 2> fingers;  // A, B
  kinematics::JointLimits limits = kinematics::JointLimits::defaults();
  std::array<BellowsGeometry, 4> bellows;
  int spheres_per_chain = 5;

  static GripperModel defaults();
  void validate() const;
};

// Joint names: "<F>_lateral", "<F>_flexion", "<F>_distal", "<F>_tip" with
// F in {A, B}.
std::string finger_prefix(std::size_t finger);

// Builds the description with sphere visuals posed at `angles`. Throws
// LimitViolation for out-of-limit angles and Error(kStructural) when the
// resulting tree is malformed.
GripperDescription export_description(const GripperModel& model,
                                      const std::array<kinematics::JointAngles, 2>& angles);

// Throws Error(kStructural) unless the tree has unique names, a single
// root, every non-root link has exactly one parent joint, no cycles and
// orthogonal axes within each universal pair.
void validate_tree(const GripperDescription& desc);

// Rigid transform of a joint's origin (parent link -> joint frame).
Eigen::Isometry3d joint_origin(const Joint& j);
Eigen::Vector3d rpy_from_rotation(const Eigen::Matrix3d& r);

}  // namespace bhg::model

#endif  // BHG_GRIPPER_DESCRIPTION_H_
