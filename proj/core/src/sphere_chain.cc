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

#include "bhg/sphere_chain.h"

#include <cmath>
#include <string>

#include "bhg/error.h"

namespace bhg::model {

std::vector<double> SphereChain::fractions() const {
  std::vector<double> out;
  out.reserve(spheres.size());
  for (const auto& s : spheres) {
    switch (s.kind) {
      case Attachment::kLower: out.push_back(0.0); break;
      case Attachment::kUpper: out.push_back(1.0); break;
      case Attachment::kProportional: out.push_back(s.fraction); break;
    }
  }
  return out;
}

SphereChain discretize_bellows(const BellowsGeometry& bellows,
                               const Eigen::Vector3d& joint_axis, int n) {
  if (n < 3) {
    throw Error(ErrorCode::kInvalidArgument,
                "a sphere chain needs at least 3 spheres, got " + std::to_string(n));
  }
  if (!(bellows.radius > 0.0) || !std::isfinite(bellows.radius)) {
    throw Error(ErrorCode::kInvalidArgument, "bellows radius must be positive");
  }
  if (!bellows.lower_anchor.allFinite() || !bellows.upper_anchor.allFinite()) {
    throw Error(ErrorCode::kInvalidArgument, "bellows anchors must be finite");
  }
  const double len = joint_axis.norm();
  if (!(len > 0.0) || !std::isfinite(len)) {
    throw Error(ErrorCode::kInvalidArgument, "joint axis must be a nonzero vector");
  }
  SphereChain chain;
  chain.bellows = bellows;
  chain.axis = joint_axis / len;
  chain.spheres.reserve(n);
  chain.spheres.push_back({Attachment::kLower, 0.0});
  for (int i = 1; i + 1 < n; ++i) {
    chain.spheres.push_back(
        {Attachment::kProportional, static_cast<double>(i) / static_cast<double>(n - 1)});
  }
  chain.spheres.push_back({Attachment::kUpper, 1.0});
  return chain;
}

std::vector<Eigen::Vector3d> chain_centers(const SphereChain& chain, double joint_angle) {
  const Eigen::Vector3d& a = chain.bellows.lower_anchor;
  const Eigen::Vector3d& b = chain.bellows.upper_anchor;
  std::vector<Eigen::Vector3d> out;
  out.reserve(chain.size());
  for (double f : chain.fractions()) {
    const Eigen::Vector3d p = a + f * (b - a);
    out.push_back(Eigen::AngleAxisd(f * joint_angle, chain.axis) * p);
  }
  return out;
}

std::vector<Eigen::Vector3d> pose_chain(const SphereChain& chain, double joint_angle,
                                        const Eigen::Isometry3d& lower,
                                        const Eigen::Isometry3d& upper) {
  const Eigen::Isometry3d expected =
      lower * Eigen::Isometry3d(Eigen::AngleAxisd(joint_angle, chain.axis));
  const double scale = 1.0 + lower.translation().norm();
  if (!(expected.matrix() - upper.matrix()).allFinite() ||
      (expected.linear() - upper.linear()).cwiseAbs().maxCoeff() > 1e-9 ||
      (expected.translation() - upper.translation()).norm() > 1e-9 * scale) {
    throw Error(ErrorCode::kConsistency,
                "upper frame is not the lower frame rotated by the joint angle");
  }
  auto centers = chain_centers(chain, joint_angle);
  for (auto& c : centers) c = lower * c;
  return centers;
}

}  // namespace bhg::model
