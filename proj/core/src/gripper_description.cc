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

#include "bhg/gripper_description.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string_view>

#include "bhg/error.h"

namespace bhg::model {
namespace {

constexpr double kMmToM = 1e-3;
constexpr double kEffort = 1.0;    // N·m, nominal
constexpr double kVelocity = 1.0;  // rad/s, nominal

[[noreturn]] void structural(const std::string& msg) {
  throw Error(ErrorCode::kStructural, msg);
}

bool ends_with(const std::string& s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

const Link* GripperDescription::find_link(const std::string& n) const {
  for (const auto& l : links) {
    if (l.name == n) return &l;
  }
  return nullptr;
}

const Joint* GripperDescription::find_joint(const std::string& n) const {
  for (const auto& j : joints) {
    if (j.name == n) return &j;
  }
  return nullptr;
}

std::size_t GripperDescription::sphere_count() const {
  std::size_t n = 0;
  for (const auto& l : links) n += l.spheres.size();
  return n;
}

GripperModel GripperModel::defaults() {
  GripperModel m;
  m.fingers[0].base_offset = Eigen::Isometry3d(Eigen::Translation3d(0.0, -25.0, 0.0));
  m.fingers[1].base_offset =
      Eigen::Translation3d(0.0, 25.0, 0.0) *
      Eigen::AngleAxisd(std::numbers::pi, Eigen::Vector3d::UnitX());
  m.fingers[1].mirrored = true;
  // Big bellows (distal, root) and small lateral ones; radii are half the
  // listed diameters.
  m.bellows[0] = {15.25, {-15.0, 16.0, 0.0}, {15.0, 16.0, 0.0}};
  m.bellows[1] = {18.78, {-15.0, 0.0, 16.0}, {15.0, 0.0, 16.0}};
  m.bellows[2] = {15.25, {-15.0, -16.0, 0.0}, {15.0, -16.0, 0.0}};
  m.bellows[3] = {18.78, {-15.0, 0.0, -16.0}, {15.0, 0.0, -16.0}};
  return m;
}

void GripperModel::validate() const {
  limits.validate();
  if (spheres_per_chain < 3) {
    throw Error(ErrorCode::kInvalidArgument, "spheres_per_chain must be >= 3");
  }
  for (const auto& g : fingers) {
    if (!(g.l1 > 0.0) || !(g.l2 > 0.0) || !std::isfinite(g.l1) || !std::isfinite(g.l2)) {
      throw Error(ErrorCode::kInvalidArgument, "link lengths must be positive");
    }
    if (!(g.axis_offset >= 0.0) || !std::isfinite(g.axis_offset)) {
      throw Error(ErrorCode::kInvalidArgument, "axis_offset must be >= 0");
    }
    if (!g.base_offset.matrix().allFinite()) {
      throw Error(ErrorCode::kInvalidArgument, "base offset must be finite");
    }
  }
  for (const auto& b : bellows) {
    if (!(b.radius > 0.0) || !std::isfinite(b.radius)) {
      throw Error(ErrorCode::kInvalidArgument, "bellows radius must be positive");
    }
  }
}

std::string finger_prefix(std::size_t finger) { return finger == 0 ? "A" : "B"; }

Eigen::Vector3d rpy_from_rotation(const Eigen::Matrix3d& r) {
  const double pitch = std::asin(std::clamp(-r(2, 0), -1.0, 1.0));
  const double roll = std::atan2(r(2, 1), r(2, 2));
  const double yaw = std::atan2(r(1, 0), r(0, 0));
  return {roll, pitch, yaw};
}

Eigen::Isometry3d joint_origin(const Joint& j) {
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  t.translate(j.xyz);
  t.rotate(Eigen::AngleAxisd(j.rpy.z(), Eigen::Vector3d::UnitZ()) *
           Eigen::AngleAxisd(j.rpy.y(), Eigen::Vector3d::UnitY()) *
           Eigen::AngleAxisd(j.rpy.x(), Eigen::Vector3d::UnitX()));
  return t;
}

GripperDescription export_description(const GripperModel& model,
                                      const std::array<kinematics::JointAngles, 2>& angles) {
  model.validate();
  for (const auto& a : angles) model.limits.check(a);

  GripperDescription desc;
  desc.links.push_back({"base", {}});

  struct Pending {
    std::string link;
    SphereVisual visual;
  };
  std::vector<Pending> pending;

  for (std::size_t f = 0; f < 2; ++f) {
    const auto& geom = model.fingers[f];
    const auto& a = angles[f];
    const std::string p = finger_prefix(f);
    for (const char* suffix : {"_universal", "_proximal", "_distal", "_tip"}) {
      desc.links.push_back({p + suffix, {}});
    }

    Joint lateral;
    lateral.name = p + "_lateral";
    lateral.parent = "base";
    lateral.child = p + "_universal";
    lateral.xyz = geom.base_offset.translation() * kMmToM;
    lateral.rpy = rpy_from_rotation(geom.base_offset.linear());
    lateral.axis = geom.mirrored ? Eigen::Vector3d(-1.0, 0.0, 0.0) : Eigen::Vector3d::UnitX();
    lateral.lower = model.limits.phi.lower;
    lateral.upper = model.limits.phi.upper;
    lateral.position = a.phi;

    Joint flexion;
    flexion.name = p + "_flexion";
    flexion.parent = p + "_universal";
    flexion.child = p + "_proximal";
    flexion.xyz = Eigen::Vector3d(geom.axis_offset * kMmToM, 0.0, 0.0);
    flexion.axis = Eigen::Vector3d::UnitZ();
    flexion.lower = model.limits.theta1.lower;
    flexion.upper = model.limits.theta1.upper;
    flexion.position = a.theta1;

    Joint distal;
    distal.name = p + "_distal";
    distal.parent = p + "_proximal";
    distal.child = p + "_distal";
    distal.xyz = Eigen::Vector3d(geom.l2 * kMmToM, 0.0, 0.0);
    distal.axis = Eigen::Vector3d(0.0, 0.0, -1.0);
    distal.lower = model.limits.theta2.lower;
    distal.upper = model.limits.theta2.upper;
    distal.position = a.theta2;

    Joint tip;
    tip.name = p + "_tip";
    tip.type = JointType::kFixed;
    tip.parent = p + "_distal";
    tip.child = p + "_tip";
    tip.xyz = Eigen::Vector3d(geom.l1 * kMmToM, 0.0, 0.0);

    for (Joint* j : {&lateral, &flexion, &distal}) {
      j->effort = kEffort;
      j->velocity = kVelocity;
    }

    // Chamber -> spanned joint.
    const std::array<const Joint*, 4> spans = {&distal, &lateral, &flexion, &lateral};
    for (int c = 0; c < 4; ++c) {
      const Joint& j = *spans[c];
      // Anchors are in mm; the joint origin is rebuilt in mm to pose them.
      Joint j_mm = j;
      j_mm.xyz = j.xyz / kMmToM;
      const Eigen::Isometry3d origin = joint_origin(j_mm);
      const SphereChain chain =
          discretize_bellows(model.bellows[c], j.axis, model.spheres_per_chain);
      const auto centers = chain_centers(chain, j.position);
      ChainRecord rec;
      rec.chamber = static_cast<int>(f) * 4 + c;
      rec.name = p + "_chamber" + std::to_string(rec.chamber);
      rec.joint = j.name;
      rec.link = j.parent;
      rec.spheres = static_cast<int>(centers.size());
      rec.radius = chain.bellows.radius * kMmToM;
      for (std::size_t i = 0; i < centers.size(); ++i) {
        SphereVisual v;
        v.name = rec.name + "_s" + std::to_string(i);
        v.xyz = (origin * centers[i]) * kMmToM;
        v.radius = rec.radius;
        pending.push_back({rec.link, v});
      }
      desc.chains.push_back(rec);
    }

    for (Joint* j : {&lateral, &flexion, &distal, &tip}) desc.joints.push_back(*j);
  }

  for (auto& pv : pending) {
    for (auto& l : desc.links) {
      if (l.name == pv.link) {
        l.spheres.push_back(std::move(pv.visual));
        break;
      }
    }
  }
  validate_tree(desc);
  return desc;
}

void validate_tree(const GripperDescription& desc) {
  std::set<std::string> link_names;
  for (const auto& l : desc.links) {
    if (l.name.empty()) structural("link with empty name");
    if (!link_names.insert(l.name).second) structural("duplicate link '" + l.name + "'");
  }
  std::set<std::string> joint_names;
  std::map<std::string, std::string> parent_of;
  for (const auto& j : desc.joints) {
    if (!joint_names.insert(j.name).second) structural("duplicate joint '" + j.name + "'");
    if (!link_names.count(j.parent)) {
      structural("joint '" + j.name + "' has unknown parent '" + j.parent + "'");
    }
    if (!link_names.count(j.child)) {
      structural("joint '" + j.name + "' has unknown child '" + j.child + "'");
    }
    if (!parent_of.emplace(j.child, j.parent).second) {
      structural("link '" + j.child + "' has more than one parent joint");
    }
    if (j.type == JointType::kRevolute) {
      if (std::abs(j.axis.norm() - 1.0) > 1e-12) {
        structural("joint '" + j.name + "' axis is not unit length");
      }
      if (!(j.lower <= j.upper)) structural("joint '" + j.name + "' has inverted limits");
    }
  }
  std::size_t roots = 0;
  for (const auto& n : link_names) {
    if (!parent_of.count(n)) ++roots;
  }
  if (roots != 1) structural("tree must have exactly one root link");
  for (const auto& [child, parent] : parent_of) {
    std::string cur = child;
    for (std::size_t hops = 0; parent_of.count(cur); ++hops) {
      if (hops > link_names.size()) structural("joint graph contains a cycle");
      cur = parent_of.at(cur);
    }
  }
  for (const auto& a : desc.joints) {
    if (!ends_with(a.child, "_universal")) continue;
    for (const auto& b : desc.joints) {
      if (b.parent != a.child) continue;
      if (std::abs(a.axis.dot(b.axis)) > 1e-12) {
        structural("universal pair '" + a.name + "'/'" + b.name + "' is not orthogonal");
      }
    }
  }
  for (const auto& c : desc.chains) {
    const Link* l = desc.find_link(c.link);
    if (!l || !desc.find_joint(c.joint)) {
      structural("chain '" + c.name + "' refers to a missing link or joint");
    }
  }
}

}  // namespace bhg::model
