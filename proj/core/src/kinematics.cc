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

#include "bhg/kinematics.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "bhg/error.h"

namespace bhg::kinematics {
namespace {

constexpr double kPi = std::numbers::pi;

double lateral_angle(const JointAngles& a, const LinkGeometry& geom) {
  return geom.mirrored ? -a.phi : a.phi;
}

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

void check_geometry(const LinkGeometry& geom) {
  if (!(geom.l1 > 0.0) || !(geom.l2 > 0.0) || !std::isfinite(geom.l1) ||
      !std::isfinite(geom.l2) || !std::isfinite(geom.axis_offset)) {
    throw Error(ErrorCode::kInvalidArgument,
                "link lengths must be positive and finite");
  }
}

}  // namespace

JointLimits JointLimits::defaults() {
  constexpr double deg = kPi / 180.0;
  return {{-15.0 * deg, 90.0 * deg}, {0.0, 90.0 * deg}, {-30.0 * deg, 30.0 * deg}};
}

void JointLimits::validate() const {
  auto check_one = [](const char* name, const Interval& r) {
    if (!(r.lower <= 0.0 && 0.0 <= r.upper) || !std::isfinite(r.lower) ||
        !std::isfinite(r.upper)) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("joint limit for ") + name +
                      " must be a finite interval containing 0");
    }
  };
  check_one("theta1", theta1);
  check_one("theta2", theta2);
  check_one("phi", phi);
}

bool JointLimits::contains(const JointAngles& a) const {
  return theta1.contains(a.theta1) && theta2.contains(a.theta2) &&
         phi.contains(a.phi);
}

void JointLimits::check(const JointAngles& a) const {
  if (!theta1.contains(a.theta1)) {
    throw LimitViolation("theta1", a.theta1, theta1.lower, theta1.upper);
  }
  if (!theta2.contains(a.theta2)) {
    throw LimitViolation("theta2", a.theta2, theta2.lower, theta2.upper);
  }
  if (!phi.contains(a.phi)) {
    throw LimitViolation("phi", a.phi, phi.lower, phi.upper);
  }
}

TipPosition forward_kinematics(const JointAngles& angles,
                               const LinkGeometry& geom,
                               const JointLimits& limits) {
  limits.check(angles);
  return forward_kinematics(angles, geom);
}

TipPosition forward_kinematics(const JointAngles& angles,
                               const LinkGeometry& geom) {
  const double distal = angles.theta1 - angles.theta2;
  const double px = geom.axis_offset + geom.l1 * std::cos(distal) +
                    geom.l2 * std::cos(angles.theta1);
  const double py = geom.l1 * std::sin(distal) + geom.l2 * std::sin(angles.theta1);
  const double phi = lateral_angle(angles, geom);
  return {px, py * std::cos(phi), py * std::sin(phi)};
}

std::array<Frame, 4> forward_chain(const JointAngles& angles,
                                   const LinkGeometry& geom,
                                   const JointLimits& limits) {
  limits.check(angles);
  return forward_chain(angles, geom);
}

std::array<Frame, 4> forward_chain(const JointAngles& angles,
                                   const LinkGeometry& geom) {
  using Eigen::AngleAxisd;
  using Eigen::Translation3d;
  std::array<Frame, 4> frames;
  frames[0] = Frame::Identity();
  frames[1] = frames[0] *
              AngleAxisd(lateral_angle(angles, geom), Vec3::UnitX()) *
              Translation3d(geom.axis_offset, 0.0, 0.0) *
              AngleAxisd(angles.theta1, Vec3::UnitZ());
  frames[2] = frames[1] * Translation3d(geom.l2, 0.0, 0.0) *
              AngleAxisd(-angles.theta2, Vec3::UnitZ());
  frames[3] = frames[2] * Translation3d(geom.l1, 0.0, 0.0);
  return frames;
}

JointAngles inverse_kinematics(const TipPosition& target,
                               const LinkGeometry& geom,
                               const JointLimits& limits) {
  check_geometry(geom);
  if (!std::isfinite(target.x) || !std::isfinite(target.y) ||
      !std::isfinite(target.z)) {
    throw Error(ErrorCode::kInvalidArgument, "IK target must be finite");
  }
  const double z = geom.mirrored ? -target.z : target.z;
  const double rho = std::hypot(target.y, z);
  const double px = target.x - geom.axis_offset;

  const double l1 = geom.l1;
  const double l2 = geom.l2;
  const double r = std::hypot(px, rho);
  const double r_max = l1 + l2;
  const double r_min = std::abs(l1 - l2);
  // Slack for targets produced by FK at the shell boundary.
  const double slack = 1e-9 * r_max;
  if (r > r_max + slack) throw OutOfWorkspace(r, r_max);
  if (r < r_min - slack) throw OutOfWorkspace(r, r_min);

  const double c = std::clamp((r * r - l1 * l1 - l2 * l2) / (2.0 * l1 * l2), -1.0, 1.0);
  const double elbow = std::acos(c);

  struct Branch {
    double phi;
    double planar_y;
  };
  std::array<Branch, 2> branches{};
  std::size_t branch_count = 1;
  if (rho == 0.0) {
    branches[0] = {0.0, 0.0};
  } else {
    const double phi = std::atan2(z, target.y);
    branches[0] = {phi, rho};
    branches[1] = {wrap_angle(phi + kPi), -rho};
    branch_count = 2;
  }

  std::array<JointAngles, 4> candidates{};
  std::size_t n = 0;
  for (std::size_t b = 0; b < branch_count; ++b) {
    for (int sign : {1, -1}) {
      if (sign < 0 && elbow == 0.0) continue;
      const double theta2 = sign * elbow;
      const double theta1 =
          std::atan2(branches[b].planar_y, px) -
          std::atan2(-l1 * std::sin(theta2), l2 + l1 * std::cos(theta2));
      candidates[n++] = {wrap_angle(theta1), theta2, branches[b].phi};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (limits.contains(candidates[i])) return candidates[i];
  }
  limits.check(candidates[0]);
  return candidates[0];  // unreachable: check() throws
}

TipPosition to_gripper_frame(const TipPosition& tip, const LinkGeometry& geom) {
  return TipPosition::from(geom.base_offset * tip.vec());
}

std::vector<double> sample_interval(const Interval& range, double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be positive");
  }
  const double width = range.upper - range.lower;
  if (width <= 0.0) return {range.lower};
  const auto segments =
      static_cast<std::size_t>(std::ceil(width / step - 1e-9));
  const std::size_t count = std::max<std::size_t>(segments, 1) + 1;
  std::vector<double> values(count);
  const double denom = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    const double hi_w = static_cast<double>(i);
    const double lo_w = static_cast<double>(count - 1 - i);
    values[i] = (range.lower * lo_w + range.upper * hi_w) / denom;
  }
  return values;
}

std::vector<TipPosition> workspace_sample(const JointLimits& limits,
                                          const LinkGeometry& geom,
                                          double resolution) {
  if (!(resolution > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "resolution must be positive");
  }
  check_geometry(geom);
  const auto t1 = sample_interval(limits.theta1, resolution);
  const auto t2 = sample_interval(limits.theta2, resolution);
  const auto ph = sample_interval(limits.phi, resolution);
  std::vector<TipPosition> cloud;
  cloud.reserve(t1.size() * t2.size() * ph.size());
  for (double a : t1) {
    for (double b : t2) {
      for (double c : ph) {
        cloud.push_back(forward_kinematics({a, b, c}, geom));
      }
    }
  }
  return cloud;
}

}  // namespace bhg::kinematics
