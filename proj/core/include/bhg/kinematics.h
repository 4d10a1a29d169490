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

#ifndef BHG_KINEMATICS_H_
#define BHG_KINEMATICS_H_

#include <array>
#include <vector>

#include <Eigen/Geometry>

namespace bhg::kinematics {

using Vec3 = Eigen::Vector3d;
using Frame = Eigen::Isometry3d;

// Link lengths and mounting of one finger. Distances in mm.
//
// The finger frame has x along the extended finger, y in the flexion
// plane at zero lateral rotation, and z as the lateral direction swept by
// the universal joint's x-axis rotation.
struct LinkGeometry {
  double l1 = 70.0;  // distal link
  double l2 = 44.0;  // proximal link
  // Distance along x between the lateral and flexion axes of the universal
  // joint.
  double axis_offset = 0.0;
  // Gripper base -> finger base. Only used for gripper-frame outputs.
  Frame base_offset = Frame::Identity();
  // Second finger: FK results have the lateral (z) coordinate negated.
  bool mirrored = false;
};

// theta1 flexes the proximal link, theta2 is the distal link's angle
// relative to the proximal one (positive closes), phi is the lateral
// rotation about the finger x-axis. Radians.
struct JointAngles {
  double theta1 = 0.0;
  double theta2 = 0.0;
  double phi = 0.0;

  friend bool operator==(const JointAngles&, const JointAngles&) = default;
};

struct Interval {
  double lower = 0.0;
  double upper = 0.0;

  bool contains(double v) const { return v >= lower && v <= upper; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

struct JointLimits {
  Interval theta1;
  Interval theta2;
  Interval phi;

  // Default box: theta1 in [-15, 90] deg, theta2 in [0, 90] deg,
  // phi in [-30, 30] deg.
  static JointLimits defaults();
  // Throws InvalidArgument unless lower <= 0 <= upper on every axis.
  void validate() const;
  bool contains(const JointAngles& a) const;
  // Throws LimitViolation naming the first offending angle.
  void check(const JointAngles& a) const;

  friend bool operator==(const JointLimits&, const JointLimits&) = default;
};

struct TipPosition {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  Vec3 vec() const { return {x, y, z}; }
  static TipPosition from(const Vec3& v) { return {v.x(), v.y(), v.z()}; }
  friend bool operator==(const TipPosition&, const TipPosition&) = default;
};

// Tip position in the finger base frame. Throws LimitViolation when
// `angles` is outside `limits`.
TipPosition forward_kinematics(const JointAngles& angles,
                               const LinkGeometry& geom,
                               const JointLimits& limits);
// Same, without a limit check.
TipPosition forward_kinematics(const JointAngles& angles,
                               const LinkGeometry& geom);

// Frames of base, proximal joint, distal joint and tip, each expressed in
// the finger base frame. The tip frame's origin equals forward_kinematics.
std::array<Frame, 4> forward_chain(const JointAngles& angles,
                                   const LinkGeometry& geom,
                                   const JointLimits& limits);
std::array<Frame, 4> forward_chain(const JointAngles& angles,
                                   const LinkGeometry& geom);

// Geometric IK: phi from atan2(z, y), then the planar two-link problem in
// the de-rotated plane by the law of cosines. Prefers theta2 >= 0 and the
// phi branch given by atan2; falls back to the other branches only when
// the preferred one violates `limits`.
//
// Throws OutOfWorkspace for targets off the reachable shell and
// LimitViolation when no branch lies inside `limits`.
JointAngles inverse_kinematics(const TipPosition& target,
                               const LinkGeometry& geom,
                               const JointLimits& limits);

// Tip position in the gripper base frame (base_offset applied).
TipPosition to_gripper_frame(const TipPosition& tip, const LinkGeometry& geom);

// Grid samples of one interval: ceil(width / step) + 1 evenly spaced
// values including both ends (a single value for a degenerate interval).
std::vector<double> sample_interval(const Interval& range, double step);

// FK over the grid product of the three angle ranges, theta1-major then
// theta2 then phi. Throws InvalidArgument for resolution <= 0.
std::vector<TipPosition> workspace_sample(const JointLimits& limits,
                                          const LinkGeometry& geom,
                                          double resolution);

}  // namespace bhg::kinematics

#endif  // BHG_KINEMATICS_H_
