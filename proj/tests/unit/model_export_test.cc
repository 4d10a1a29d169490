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
#include <random>

#include <gtest/gtest.h>

#include "bhg/error.h"
#include "bhg/gripper_description.h"
#include "bhg/kinematics.h"
#include "bhg/sphere_chain.h"
#include "bhg/urdf.h"
#include "oracles.h"

namespace bhg::model {
namespace {

using kinematics::JointAngles;

using oracle::link_frames;
using oracle::origin_matrix;

JointAngles random_angles(std::mt19937& rng, const kinematics::JointLimits& l) {
  auto u = [&](const kinematics::Interval& i) {
    return std::uniform_real_distribution<double>(i.lower, i.upper)(rng);
  };
  return {u(l.theta1), u(l.theta2), u(l.phi)};
}

TEST(SphereChain, FractionsEvenlySpaced) {
  const auto c = discretize_bellows({}, Eigen::Vector3d::UnitZ(), 5);
  EXPECT_EQ(c.fractions(), (std::vector<double>{0.0, 0.25, 0.5, 0.75, 1.0}));
  EXPECT_EQ(c.spheres.front().kind, Attachment::kLower);
  EXPECT_EQ(c.spheres.back().kind, Attachment::kUpper);
}

TEST(SphereChain, RejectsBadInput) {
  EXPECT_THROW(discretize_bellows({}, Eigen::Vector3d::UnitZ(), 2), Error);
  EXPECT_THROW(discretize_bellows({0.0}, Eigen::Vector3d::UnitZ(), 5), Error);
  EXPECT_THROW(discretize_bellows({}, Eigen::Vector3d::Zero(), 5), Error);
}

TEST(SphereChain, CentersMatchCumulativeRotation) {
  BellowsGeometry b;
  const auto c = discretize_bellows(b, Eigen::Vector3d::UnitZ(), 5);
  const double angle = 0.7;
  const auto centers = chain_centers(c, angle);
  for (int i = 0; i < 5; ++i) {
    const double f = i / 4.0;
    const Eigen::Vector4d p0((b.lower_anchor + f * (b.upper_anchor - b.lower_anchor)).homogeneous());
    const Eigen::Vector4d p = oracle::rot_z(f * angle) * p0;
    EXPECT_LT((centers[i] - p.head<3>()).norm(), 1e-12);
  }
}

TEST(SphereChain, QuarterTurnByMatrix) {
  BellowsGeometry b;
  b.lower_anchor = {10, 0, 0};
  b.upper_anchor = {10, 0, 0};
  const auto c = discretize_bellows(b, Eigen::Vector3d::UnitZ(), 3);
  const auto centers = chain_centers(c, std::numbers::pi / 2);
  // Middle sphere turns pi/4: cos = sin = sqrt(2)/2.
  const double h = std::sqrt(0.5);
  EXPECT_LT((centers[1] - Eigen::Vector3d(10 * h, 10 * h, 0)).norm(), 1e-12);
  EXPECT_LT((centers[2] - Eigen::Vector3d(0, 10, 0)).norm(), 1e-12);
}

TEST(SphereChain, MirroredAxisMirrorsAngle) {
  const BellowsGeometry b;
  const auto plus = chain_centers(discretize_bellows(b, Eigen::Vector3d::UnitX(), 5), 0.3);
  const auto minus = chain_centers(discretize_bellows(b, -Eigen::Vector3d::UnitX(), 5), -0.3);
  for (std::size_t i = 0; i < plus.size(); ++i) EXPECT_LT((plus[i] - minus[i]).norm(), 1e-12);
}

TEST(SphereChain, EndpointsSitOnLinks) {
  const BellowsGeometry b;
  const auto c = discretize_bellows(b, Eigen::Vector3d::UnitZ(), 5);
  const Eigen::Isometry3d lower = Eigen::Translation3d(1, 2, 3) * Eigen::AngleAxisd(0.2, Eigen::Vector3d::UnitX());
  const Eigen::Isometry3d upper = lower * Eigen::AngleAxisd(0.5, Eigen::Vector3d::UnitZ());
  const auto pts = pose_chain(c, 0.5, lower, upper);
  EXPECT_LT((pts.front() - lower * b.lower_anchor).norm(), 1e-12);
  EXPECT_LT((pts.back() - upper * b.upper_anchor).norm(), 1e-12);
}

TEST(SphereChain, InconsistentFramesRejected) {
  const auto c = discretize_bellows({}, Eigen::Vector3d::UnitZ(), 5);
  const Eigen::Isometry3d lower = Eigen::Isometry3d::Identity();
  const Eigen::Isometry3d upper(Eigen::AngleAxisd(0.3, Eigen::Vector3d::UnitZ()));
  try {
    pose_chain(c, 0.5, lower, upper);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kConsistency);
  }
}

TEST(Export, CountsAndNames) {
  const auto d = export_description(GripperModel::defaults(), {});
  EXPECT_EQ(d.links.size(), 9u);
  EXPECT_EQ(d.joints.size(), 8u);
  EXPECT_EQ(d.chains.size(), 8u);
  EXPECT_EQ(d.sphere_count(), 40u);
  EXPECT_NE(d.find_joint("A_flexion"), nullptr);
  EXPECT_NE(d.find_link("B_tip"), nullptr);
  for (const auto& c : d.chains) EXPECT_EQ(c.spheres, 5);
}

TEST(Export, LimitsCopiedExactly) {
  const auto m = GripperModel::defaults();
  const auto d = export_description(m, {});
  const auto* j = d.find_joint("B_distal");
  ASSERT_NE(j, nullptr);
  EXPECT_EQ(j->lower, m.limits.theta2.lower);
  EXPECT_EQ(j->upper, m.limits.theta2.upper);
  EXPECT_EQ(d.find_joint("A_lateral")->upper, m.limits.phi.upper);
}

TEST(Export, TreeMatchesKinematicsAndRoundtrips) {
  std::mt19937 rng(17);
  const auto m = GripperModel::defaults();
  for (int trial = 0; trial < 25; ++trial) {
    const std::array<JointAngles, 2> q{random_angles(rng, m.limits), random_angles(rng, m.limits)};
    const auto d = export_description(m, q);
    const auto back = read_urdf(write_urdf(d));
    for (const auto* desc : {&d, &back}) {
      const auto frames = link_frames(*desc, q);
      for (std::size_t f = 0; f < 2; ++f) {
        const Eigen::Vector3d tip_m = frames.at(finger_prefix(f) + "_tip").topRightCorner<3, 1>();
        const auto ref = kinematics::to_gripper_frame(
            kinematics::forward_kinematics(q[f], m.fingers[f]), m.fingers[f]);
        EXPECT_LT((tip_m * 1000.0 - ref.vec()).norm(), 1e-9);
      }
    }
    EXPECT_TRUE(back == d);
  }
}

TEST(Export, SphereEndpointsTrackLinks) {
  const auto m = GripperModel::defaults();
  const std::array<JointAngles, 2> q{JointAngles{0.4, 0.9, 0.2}, JointAngles{0.1, 0.3, -0.25}};
  const auto d = export_description(m, q);
  const auto frames = link_frames(d, q);
  for (const auto& c : d.chains) {
    const auto* link = d.find_link(c.link);
    const auto* joint = d.find_joint(c.joint);
    ASSERT_TRUE(link && joint);
    const auto& b = m.bellows[c.chamber % 4];
    std::vector<const SphereVisual*> sv;
    for (const auto& s : link->spheres)
      if (s.name.rfind(c.name + "_s", 0) == 0) sv.push_back(&s);
    ASSERT_EQ(sv.size(), 5u);
    const Eigen::Matrix4d lower = frames.at(c.link);
    const Eigen::Matrix4d upper = frames.at(joint->child);
    const Eigen::Vector4d first = lower * Eigen::Vector4d(sv.front()->xyz.x(), sv.front()->xyz.y(), sv.front()->xyz.z(), 1);
    const Eigen::Vector4d last = lower * Eigen::Vector4d(sv.back()->xyz.x(), sv.back()->xyz.y(), sv.back()->xyz.z(), 1);
    const Eigen::Vector4d a = lower * origin_matrix(*joint) *
                              Eigen::Vector4d(b.lower_anchor.x() / 1000, b.lower_anchor.y() / 1000,
                                              b.lower_anchor.z() / 1000, 1);
    const Eigen::Vector4d bb = upper * Eigen::Vector4d(b.upper_anchor.x() / 1000,
                                                       b.upper_anchor.y() / 1000,
                                                       b.upper_anchor.z() / 1000, 1);
    EXPECT_LT((first - a).norm(), 1e-12) << c.name;
    EXPECT_LT((last - bb).norm(), 1e-12) << c.name;
  }
}

TEST(Export, OutOfLimitAnglesRejected) {
  EXPECT_THROW(export_description(GripperModel::defaults(), {JointAngles{0, 0, 1.0}, JointAngles{}}),
               Error);
}

TEST(Validate, StructuralErrors) {
  auto d = export_description(GripperModel::defaults(), {});
  auto expect_structural = [](const GripperDescription& g) {
    try {
      validate_tree(g);
      ADD_FAILURE();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kStructural);
    }
  };
  auto dup = d;
  dup.links.push_back(dup.links.back());
  expect_structural(dup);
  auto dangling = d;
  dangling.joints[1].parent = "nowhere";
  expect_structural(dangling);
  auto cycle = d;
  cycle.joints[0].parent = cycle.joints[0].child;
  expect_structural(cycle);
  auto bad_limits = d;
  bad_limits.joints[0].lower = 1.0;
  bad_limits.joints[0].upper = -1.0;
  expect_structural(bad_limits);
}

TEST(Urdf, MalformedXmlRejected) {
  EXPECT_THROW(read_urdf("<robot"), Error);
  EXPECT_THROW(read_urdf("<robot name=\"x\"><joint name=\"j\" type=\"prismatic\"/></robot>"), Error);
}

TEST(Urdf, OutputIsDeterministic) {
  const auto d = export_description(GripperModel::defaults(), {});
  EXPECT_EQ(write_urdf(d), write_urdf(export_description(GripperModel::defaults(), {})));
  EXPECT_NE(write_urdf(d).find("<bellows"), std::string::npos);
}

TEST(Rpy, RoundtripsRotation) {
  std::mt19937 rng(2);
  std::uniform_real_distribution<double> a(-3, 3), p(-1.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    Joint j;
    j.rpy = {a(rng), p(rng), a(rng)};
    const Eigen::Matrix3d r = origin_matrix(j).topLeftCorner<3, 3>();
    Joint k;
    k.rpy = rpy_from_rotation(r);
    EXPECT_LT((origin_matrix(k).topLeftCorner<3, 3>() - r).norm(), 1e-12);
  }
}

}  // namespace
}  // namespace bhg::model
