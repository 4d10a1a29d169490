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

#include "bhg/urdf.h"

#include <charconv>
#include <sstream>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "bhg/error.h"

namespace bhg::model {
namespace {

namespace pt = boost::property_tree;

std::string num(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string vec(const Eigen::Vector3d& v) {
  return num(v.x()) + " " + num(v.y()) + " " + num(v.z());
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

[[noreturn]] void malformed(const std::string& msg) {
  throw Error(ErrorCode::kStructural, "malformed robot description: " + msg);
}

double parse_num(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto res = std::from_chars(s.data(), end, v);
  if (res.ec != std::errc() || res.ptr != end) malformed("bad number '" + s + "'");
  return v;
}

Eigen::Vector3d parse_vec(const std::string& s) {
  std::istringstream in(s);
  std::string a, b, c, extra;
  if (!(in >> a >> b >> c) || (in >> extra)) malformed("bad vector '" + s + "'");
  return {parse_num(a), parse_num(b), parse_num(c)};
}

std::string attr(const pt::ptree& node, const std::string& key) {
  auto v = node.get_optional<std::string>("<xmlattr>." + key);
  if (!v) malformed("missing attribute '" + key + "'");
  return *v;
}

const pt::ptree& child(const pt::ptree& node, const std::string& key) {
  auto c = node.get_child_optional(key);
  if (!c) malformed("missing element <" + key + ">");
  return *c;
}

}  // namespace

std::string write_urdf(const GripperDescription& desc) {
  validate_tree(desc);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<robot name=\"" << escape(desc.name) << "\">\n";
  for (const auto& l : desc.links) {
    if (l.spheres.empty()) {
      o << "  <link name=\"" << escape(l.name) << "\"/>\n";
      continue;
    }
    o << "  <link name=\"" << escape(l.name) << "\">\n";
    for (const auto& s : l.spheres) {
      o << "    <visual name=\"" << escape(s.name) << "\">\n";
      o << "      <origin xyz=\"" << vec(s.xyz) << "\" rpy=\"0 0 0\"/>\n";
      o << "      <geometry>\n";
      o << "        <sphere radius=\"" << num(s.radius) << "\"/>\n";
      o << "      </geometry>\n";
      o << "    </visual>\n";
    }
    o << "  </link>\n";
  }
  for (const auto& j : desc.joints) {
    const bool revolute = j.type == JointType::kRevolute;
    o << "  <joint name=\"" << escape(j.name) << "\" type=\""
      << (revolute ? "revolute" : "fixed") << "\">\n";
    o << "    <parent link=\"" << escape(j.parent) << "\"/>\n";
    o << "    <child link=\"" << escape(j.child) << "\"/>\n";
    o << "    <origin xyz=\"" << vec(j.xyz) << "\" rpy=\"" << vec(j.rpy) << "\"/>\n";
    if (revolute) {
      o << "    <axis xyz=\"" << vec(j.axis) << "\"/>\n";
      o << "    <limit lower=\"" << num(j.lower) << "\" upper=\"" << num(j.upper)
        << "\" effort=\"" << num(j.effort) << "\" velocity=\"" << num(j.velocity)
        << "\"/>\n";
      o << "    <bellows_snapshot position=\"" << num(j.position) << "\"/>\n";
    }
    o << "  </joint>\n";
  }
  for (const auto& c : desc.chains) {
    o << "  <bellows name=\"" << escape(c.name) << "\" joint=\"" << escape(c.joint)
      << "\" link=\"" << escape(c.link) << "\" chamber=\"" << c.chamber
      << "\" spheres=\"" << c.spheres << "\" radius=\"" << num(c.radius) << "\"/>\n";
  }
  o << "</robot>\n";
  return o.str();
}

GripperDescription read_urdf(std::string_view xml) {
  pt::ptree tree;
  try {
    std::istringstream in{std::string(xml)};
    pt::read_xml(in, tree);
  } catch (const pt::xml_parser_error& e) {
    malformed(e.what());
  }
  const pt::ptree& robot = child(tree, "robot");
  GripperDescription desc;
  desc.name = attr(robot, "name");
  for (const auto& [tag, node] : robot) {
    if (tag == "link") {
      Link l;
      l.name = attr(node, "name");
      for (const auto& [vtag, vnode] : node) {
        if (vtag != "visual") continue;
        SphereVisual s;
        s.name = attr(vnode, "name");
        s.xyz = parse_vec(attr(child(vnode, "origin"), "xyz"));
        s.radius = parse_num(attr(child(child(vnode, "geometry"), "sphere"), "radius"));
        l.spheres.push_back(s);
      }
      desc.links.push_back(std::move(l));
    } else if (tag == "joint") {
      Joint j;
      j.name = attr(node, "name");
      const std::string type = attr(node, "type");
      if (type == "revolute") {
        j.type = JointType::kRevolute;
      } else if (type == "fixed") {
        j.type = JointType::kFixed;
      } else {
        malformed("unsupported joint type '" + type + "'");
      }
      j.parent = attr(child(node, "parent"), "link");
      j.child = attr(child(node, "child"), "link");
      const pt::ptree& origin = child(node, "origin");
      j.xyz = parse_vec(attr(origin, "xyz"));
      j.rpy = parse_vec(attr(origin, "rpy"));
      if (j.type == JointType::kRevolute) {
        j.axis = parse_vec(attr(child(node, "axis"), "xyz"));
        const pt::ptree& lim = child(node, "limit");
        j.lower = parse_num(attr(lim, "lower"));
        j.upper = parse_num(attr(lim, "upper"));
        j.effort = parse_num(attr(lim, "effort"));
        j.velocity = parse_num(attr(lim, "velocity"));
        if (auto snap = node.get_child_optional("bellows_snapshot")) {
          j.position = parse_num(attr(*snap, "position"));
        }
      }
      desc.joints.push_back(std::move(j));
    } else if (tag == "bellows") {
      ChainRecord c;
      c.name = attr(node, "name");
      c.joint = attr(node, "joint");
      c.link = attr(node, "link");
      c.chamber = static_cast<int>(parse_num(attr(node, "chamber")));
      c.spheres = static_cast<int>(parse_num(attr(node, "spheres")));
      c.radius = parse_num(attr(node, "radius"));
      desc.chains.push_back(std::move(c));
    }
  }
  validate_tree(desc);
  return desc;
}

}  // namespace bhg::model
