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

#include "bhg/config.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <string>

#include "bhg/error.h"
#include "bhg/io.h"
#include "bhg/units.h"

namespace bhg::config {
namespace {

using nlohmann::json;
using nlohmann::ordered_json;

// Degrees for display: strip the rad round-trip noise (89.99999999999999)
// and the sign of zero.
double to_deg(double rad) {
  const double d = rad_to_deg(rad);
  const double r = std::round(d * 1e9) / 1e9;
  return (std::abs(r - d) <= 1e-12 * std::max(1.0, std::abs(d)) ? r : d) + 0.0;
}

[[noreturn]] void config_error(const std::string& path, const std::string& msg) {
  throw Error(ErrorCode::kConfig, path + ": " + msg);
}

// Walks one JSON object: each handler consumes a known key; anything left
// over is an error.
class Section {
 public:
  Section(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) config_error(path_, "expected an object");
  }

  template <typename F>
  Section& on(const std::string& key, F&& handler) {
    handlers_.emplace(key, std::forward<F>(handler));
    return *this;
  }

  Section& num(const std::string& key, double& out) {
    return on(key, [&out, this, key](const json& v) { out = number(v, sub(key)); });
  }

  Section& deg(const std::string& key, double& out) {
    return on(key, [&out, this, key](const json& v) { out = deg_to_rad(number(v, sub(key))); });
  }

  void run() const {
    for (const auto& [key, value] : j_.items()) {
      auto it = handlers_.find(key);
      if (it == handlers_.end()) config_error(sub(key), "unknown key");
      it->second(value);
    }
  }

  std::string sub(const std::string& key) const { return path_ + "." + key; }

  static double number(const json& v, const std::string& path) {
    if (!v.is_number()) config_error(path, "expected a number");
    const double d = v.get<double>();
    if (!std::isfinite(d)) config_error(path, "expected a finite number");
    return d;
  }

  static Eigen::Vector3d vec3(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3) config_error(path, "expected [x, y, z]");
    return {number(v[0], path), number(v[1], path), number(v[2], path)};
  }

  static kinematics::Interval interval_deg(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 2) config_error(path, "expected [lower, upper]");
    return {deg_to_rad(number(v[0], path)), deg_to_rad(number(v[1], path))};
  }

  static vision::Hsv hsv(const json& v, const std::string& path) {
    if (!v.is_array() || v.size() != 3) config_error(path, "expected [h, s, v]");
    for (const auto& e : v) {
      if (!e.is_number_integer()) config_error(path, "expected integers");
    }
    return {v[0].get<int>(), v[1].get<int>(), v[2].get<int>()};
  }

  static kinematics::JointAngles angles_deg(const json& v, const std::string& path) {
    const auto a = vec3(v, path);
    return {deg_to_rad(a.x()), deg_to_rad(a.y()), deg_to_rad(a.z())};
  }

 private:
  const json& j_;
  std::string path_;
  std::map<std::string, std::function<void(const json&)>> handlers_;
};

Eigen::Isometry3d pose_from(const Eigen::Vector3d& xyz, const Eigen::Vector3d& rpy_deg) {
  Eigen::Isometry3d t = Eigen::Isometry3d::Identity();
  t.translate(xyz);
  t.rotate(Eigen::AngleAxisd(deg_to_rad(rpy_deg.z()), Eigen::Vector3d::UnitZ()) *
           Eigen::AngleAxisd(deg_to_rad(rpy_deg.y()), Eigen::Vector3d::UnitY()) *
           Eigen::AngleAxisd(deg_to_rad(rpy_deg.x()), Eigen::Vector3d::UnitX()));
  return t;
}

ordered_json vec_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

ordered_json rpy_deg_json(const Eigen::Matrix3d& r) {
  const Eigen::Vector3d rpy = model::rpy_from_rotation(r);
  return {to_deg(rpy.x()), to_deg(rpy.y()), to_deg(rpy.z())};
}

ordered_json interval_json(const kinematics::Interval& i) {
  return {to_deg(i.lower), to_deg(i.upper)};
}

ordered_json map_json(const pressure::LinearMap& m) {
  ordered_json j;
  j["k_rad_per_kPa"] = m.k;
  j["b_rad"] = m.b;
  return j;
}

ordered_json angles_json(const kinematics::JointAngles& a) {
  return {to_deg(a.theta1), to_deg(a.theta2), to_deg(a.phi)};
}

template <typename F>
void wrap(const std::string& section, F&& f) {
  try {
    f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kConfig) throw;
    throw Error(ErrorCode::kConfig, section + ": " + e.what());
  }
}

}  // namespace

vision::PlanOptions ToolkitConfig::plan_options() const {
  vision::PlanOptions o = plan;
  o.stiffness = stiffness;
  o.poke = poke;
  return o;
}

void ToolkitConfig::validate() const {
  wrap("geometry", [&] { gripper.validate(); });
  wrap("pressure_map", [&] {
    for (const auto* m : {&maps.distal, &maps.root, &maps.lateral}) {
      (void)m->inverse(0.0);
    }
    if (!(maps.p_max > 0.0)) throw Error(ErrorCode::kInvalidArgument, "p_max_kPa must be > 0");
    if (!(lateral_bias >= 0.0 && lateral_bias <= maps.p_max)) {
      throw Error(ErrorCode::kInvalidArgument, "lateral_bias_kPa must lie in [0, p_max]");
    }
  });
  wrap("plant", [&] { plant.validate(); });
  wrap("controller", [&] { controller.validate(); });
  wrap("schedule", [&] { (void)schedule.intervals(); });
  wrap("holding", [&] { holding.validate(); });
  wrap("compliance", [&] {
    stiffness.validate();
    if (!(grasp.friction > 0.0 && grasp.normal_force > 0.0 && grasp.wrap_gain >= 1.0)) {
      throw Error(ErrorCode::kInvalidArgument,
                  "friction and normal force must be > 0, wrap gain >= 1");
    }
    if (!(poke.scale > 0.0 && poke.floor >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "poke scale must be > 0, floor >= 0");
    }
  });
  wrap("camera", [&] { camera.validate(); });
  wrap("vision", [&] {
    detection.hsv.validate();
    if (!(detection.inset_px >= 0.0)) {
      throw Error(ErrorCode::kInvalidArgument, "inset_px must be >= 0");
    }
  });
  wrap("plan", [&] {
    if (!(plan.standoff > 0.0)) throw Error(ErrorCode::kInvalidArgument, "standoff_mm must be > 0");
  });
}

ToolkitConfig from_json(const json& root) {
  ToolkitConfig c;
  Section top(root, "config");

  // Link lengths are shared by both fingers; mounting is per finger.
  double l1 = c.gripper.fingers[0].l1;
  double l2 = c.gripper.fingers[0].l2;
  double offset = c.gripper.fingers[0].axis_offset;
  top.on("geometry", [&](const json& j) {
    Section s(j, "config.geometry");
    s.num("l1_mm", l1).num("l2_mm", l2).num("axis_offset_mm", offset);
    s.on("fingers", [&](const json& f) {
      if (!f.is_array() || f.size() != 2) config_error(s.sub("fingers"), "expected two fingers");
      for (std::size_t i = 0; i < 2; ++i) {
        auto& g = c.gripper.fingers[i];
        const std::string path = s.sub("fingers") + "[" + std::to_string(i) + "]";
        Eigen::Vector3d xyz = g.base_offset.translation();
        Eigen::Vector3d rpy = Eigen::Vector3d::Zero();
        bool have_rpy = false;
        Section fs(f[i], path);
        fs.on("base_xyz_mm", [&](const json& v) { xyz = Section::vec3(v, fs.sub("base_xyz_mm")); });
        fs.on("base_rpy_deg", [&](const json& v) {
          rpy = Section::vec3(v, fs.sub("base_rpy_deg"));
          have_rpy = true;
        });
        fs.on("mirrored", [&](const json& v) {
          if (!v.is_boolean()) config_error(fs.sub("mirrored"), "expected a boolean");
          g.mirrored = v.get<bool>();
        });
        fs.run();
        if (have_rpy) {
          g.base_offset = pose_from(xyz, rpy);
        } else {
          g.base_offset.translation() = xyz;
        }
      }
    });
    s.run();
  });

  top.on("limits", [&](const json& j) {
    Section s(j, "config.limits");
    auto& lim = c.gripper.limits;
    s.on("theta1_deg", [&](const json& v) { lim.theta1 = Section::interval_deg(v, s.sub("theta1_deg")); });
    s.on("theta2_deg", [&](const json& v) { lim.theta2 = Section::interval_deg(v, s.sub("theta2_deg")); });
    s.on("phi_deg", [&](const json& v) { lim.phi = Section::interval_deg(v, s.sub("phi_deg")); });
    s.run();
  });

  top.on("pressure_map", [&](const json& j) {
    Section s(j, "config.pressure_map");
    auto map_section = [&](const char* name, pressure::LinearMap& m) {
      s.on(name, [&m, &s, name](const json& v) {
        Section ms(v, s.sub(name));
        ms.num("k_rad_per_kPa", m.k).num("b_rad", m.b);
        ms.run();
      });
    };
    map_section("distal", c.maps.distal);
    map_section("root", c.maps.root);
    map_section("lateral", c.maps.lateral);
    s.num("p_max_kPa", c.maps.p_max).num("lateral_bias_kPa", c.lateral_bias);
    s.run();
  });

  top.on("plant", [&](const json& j) {
    Section s(j, "config.plant");
    auto& p = c.plant;
    s.num("tank_volume_mL", p.tank_volume)
        .num("chamber_volume_mL", p.chamber_volume)
        .num("inflow_coeff_mL_per_s_kPa", p.inflow_coeff)
        .num("outflow_coeff_mL_per_s_kPa", p.outflow_coeff)
        .num("pump_rate_kPa_mL_per_s", p.pump_rate)
        .num("tank_pressure_max_kPa", p.tank_pressure_max);
    s.run();
  });

  top.on("controller", [&](const json& j) {
    Section s(j, "config.controller");
    s.num("deadband_kPa", c.controller.deadband).num("control_period_s", c.controller.control_period);
    s.run();
  });

  top.on("schedule", [&](const json& j) {
    Section s(j, "config.schedule");
    auto& sc = c.schedule;
    s.num("start_interval_s", sc.start_interval)
        .num("decrement_s", sc.decrement)
        .num("floor_s", sc.floor)
        .num("low_kPa", sc.low_kpa)
        .num("high_kPa", sc.high_kpa);
    s.run();
  });

  top.on("holding", [&](const json& j) {
    Section s(j, "config.holding");
    auto& h = c.holding;
    s.num("chamber_volume_mL", h.chamber_volume)
        .num("lever_mL_per_rad", h.lever)
        .num("pressure_a_kPa", h.pressure_a)
        .num("pressure_b_kPa", h.pressure_b)
        .num("joint_stiffness_Nmm_per_rad", h.joint_stiffness)
        .deg("held_angle_deg", h.held_angle)
        .num("atmosphere_kPa", h.atmosphere);
    s.run();
  });

  top.on("compliance", [&](const json& j) {
    Section s(j, "config.compliance");
    s.num("k_lateral_N_per_mm", c.stiffness.k_lateral)
        .num("k_structural_N_per_mm", c.stiffness.k_structural)
        .num("deflection_limit_mm", c.stiffness.deflection_limit)
        .num("friction", c.grasp.friction)
        .num("normal_force_N", c.grasp.normal_force)
        .num("wrap_gain", c.grasp.wrap_gain)
        .num("poke_scale", c.poke.scale)
        .num("poke_floor_mm", c.poke.floor);
    s.run();
  });

  top.on("camera", [&](const json& j) {
    Section s(j, "config.camera");
    auto& cam = c.camera;
    Eigen::Vector3d xyz = cam.camera_to_world.translation();
    Eigen::Vector3d rpy(180.0, 0.0, 0.0);
    bool pose_given = false;
    s.num("fx", cam.fx).num("fy", cam.fy).num("cx", cam.cx).num("cy", cam.cy);
    s.num("table_depth_mm", cam.table_depth).num("depth_sigma_mm", cam.depth_sigma);
    s.on("position_mm", [&](const json& v) {
      xyz = Section::vec3(v, s.sub("position_mm"));
      pose_given = true;
    });
    s.on("rpy_deg", [&](const json& v) {
      rpy = Section::vec3(v, s.sub("rpy_deg"));
      pose_given = true;
    });
    s.run();
    if (pose_given) cam.camera_to_world = pose_from(xyz, rpy);
  });

  top.on("vision", [&](const json& j) {
    Section s(j, "config.vision");
    auto& d = c.detection;
    s.on("hsv_lower", [&](const json& v) { d.hsv.lower = Section::hsv(v, s.sub("hsv_lower")); });
    s.on("hsv_upper", [&](const json& v) { d.hsv.upper = Section::hsv(v, s.sub("hsv_upper")); });
    s.on("edge_method", [&](const json& v) {
      const std::string m = v.is_string() ? v.get<std::string>() : "";
      if (m == "boundary") {
        d.edges.method = vision::EdgeMethod::kBoundary;
      } else if (m == "canny") {
        d.edges.method = vision::EdgeMethod::kCanny;
      } else {
        config_error(s.sub("edge_method"), "expected \"boundary\" or \"canny\"");
      }
    });
    s.num("canny_sigma", d.edges.canny.sigma)
        .num("canny_low_ratio", d.edges.canny.low_ratio)
        .num("canny_high_ratio", d.edges.canny.high_ratio)
        .num("inset_px", d.inset_px);
    s.run();
  });

  top.on("model", [&](const json& j) {
    Section s(j, "config.model");
    s.on("spheres_per_chain", [&](const json& v) {
      if (!v.is_number_integer()) config_error(s.sub("spheres_per_chain"), "expected an integer");
      c.gripper.spheres_per_chain = v.get<int>();
    });
    s.on("bellows", [&](const json& v) {
      if (!v.is_array() || v.size() != 4) {
        config_error(s.sub("bellows"), "expected four chambers (distal, left, root, right)");
      }
      for (std::size_t i = 0; i < 4; ++i) {
        auto& b = c.gripper.bellows[i];
        Section bs(v[i], s.sub("bellows") + "[" + std::to_string(i) + "]");
        bs.num("radius_mm", b.radius);
        bs.on("lower_anchor_mm",
              [&](const json& a) { b.lower_anchor = Section::vec3(a, bs.sub("lower_anchor_mm")); });
        bs.on("upper_anchor_mm",
              [&](const json& a) { b.upper_anchor = Section::vec3(a, bs.sub("upper_anchor_mm")); });
        bs.run();
      }
    });
    s.run();
  });

  top.on("plan", [&](const json& j) {
    Section s(j, "config.plan");
    s.num("standoff_mm", c.plan.standoff).num("azimuth_deg", c.plan.azimuth_deg);
    s.on("open_deg", [&](const json& v) { c.plan.open = Section::angles_deg(v, s.sub("open_deg")); });
    s.on("pinch_deg", [&](const json& v) { c.plan.pinch = Section::angles_deg(v, s.sub("pinch_deg")); });
    s.run();
  });

  top.run();
  for (auto& g : c.gripper.fingers) {
    g.l1 = l1;
    g.l2 = l2;
    g.axis_offset = offset;
  }
  c.validate();
  return c;
}

ToolkitConfig parse_config(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::kConfig, std::string("config is not valid JSON: ") + e.what());
  }
  return from_json(j);
}

ToolkitConfig load_config(const std::filesystem::path& path) {
  return parse_config(io::read_file(path));
}

ordered_json to_json(const ToolkitConfig& c) {
  ordered_json j;
  const auto& a = c.gripper.fingers[0];
  ordered_json fingers = ordered_json::array();
  for (const auto& g : c.gripper.fingers) {
    ordered_json f;
    f["base_xyz_mm"] = vec_json(g.base_offset.translation());
    f["base_rpy_deg"] = rpy_deg_json(g.base_offset.linear());
    f["mirrored"] = g.mirrored;
    fingers.push_back(f);
  }
  j["geometry"] = {{"l1_mm", a.l1}, {"l2_mm", a.l2}, {"axis_offset_mm", a.axis_offset},
                   {"fingers", fingers}};
  const auto& lim = c.gripper.limits;
  j["limits"] = {{"theta1_deg", interval_json(lim.theta1)},
                 {"theta2_deg", interval_json(lim.theta2)},
                 {"phi_deg", interval_json(lim.phi)}};
  j["pressure_map"] = {{"distal", map_json(c.maps.distal)},
                       {"root", map_json(c.maps.root)},
                       {"lateral", map_json(c.maps.lateral)},
                       {"p_max_kPa", c.maps.p_max},
                       {"lateral_bias_kPa", c.lateral_bias}};
  const auto& p = c.plant;
  j["plant"] = {{"tank_volume_mL", p.tank_volume},
                {"chamber_volume_mL", p.chamber_volume},
                {"inflow_coeff_mL_per_s_kPa", p.inflow_coeff},
                {"outflow_coeff_mL_per_s_kPa", p.outflow_coeff},
                {"pump_rate_kPa_mL_per_s", p.pump_rate},
                {"tank_pressure_max_kPa", p.tank_pressure_max}};
  j["controller"] = {{"deadband_kPa", c.controller.deadband},
                     {"control_period_s", c.controller.control_period}};
  const auto& sc = c.schedule;
  j["schedule"] = {{"start_interval_s", sc.start_interval},
                   {"decrement_s", sc.decrement},
                   {"floor_s", sc.floor},
                   {"low_kPa", sc.low_kpa},
                   {"high_kPa", sc.high_kpa}};
  const auto& h = c.holding;
  j["holding"] = {{"chamber_volume_mL", h.chamber_volume},
                  {"lever_mL_per_rad", h.lever},
                  {"pressure_a_kPa", h.pressure_a},
                  {"pressure_b_kPa", h.pressure_b},
                  {"joint_stiffness_Nmm_per_rad", h.joint_stiffness},
                  {"held_angle_deg", to_deg(h.held_angle)},
                  {"atmosphere_kPa", h.atmosphere}};
  j["compliance"] = {{"k_lateral_N_per_mm", c.stiffness.k_lateral},
                     {"k_structural_N_per_mm", c.stiffness.k_structural},
                     {"deflection_limit_mm", c.stiffness.deflection_limit},
                     {"friction", c.grasp.friction},
                     {"normal_force_N", c.grasp.normal_force},
                     {"wrap_gain", c.grasp.wrap_gain},
                     {"poke_scale", c.poke.scale},
                     {"poke_floor_mm", c.poke.floor}};
  const auto& cam = c.camera;
  j["camera"] = {{"fx", cam.fx},
                 {"fy", cam.fy},
                 {"cx", cam.cx},
                 {"cy", cam.cy},
                 {"position_mm", vec_json(cam.camera_to_world.translation())},
                 {"rpy_deg", rpy_deg_json(cam.camera_to_world.linear())},
                 {"table_depth_mm", cam.table_depth},
                 {"depth_sigma_mm", cam.depth_sigma}};
  const auto& d = c.detection;
  j["vision"] = {
      {"hsv_lower", {d.hsv.lower.h, d.hsv.lower.s, d.hsv.lower.v}},
      {"hsv_upper", {d.hsv.upper.h, d.hsv.upper.s, d.hsv.upper.v}},
      {"edge_method", d.edges.method == vision::EdgeMethod::kCanny ? "canny" : "boundary"},
      {"canny_sigma", d.edges.canny.sigma},
      {"canny_low_ratio", d.edges.canny.low_ratio},
      {"canny_high_ratio", d.edges.canny.high_ratio},
      {"inset_px", d.inset_px}};
  ordered_json bellows = ordered_json::array();
  for (const auto& b : c.gripper.bellows) {
    bellows.push_back({{"radius_mm", b.radius},
                       {"lower_anchor_mm", vec_json(b.lower_anchor)},
                       {"upper_anchor_mm", vec_json(b.upper_anchor)}});
  }
  j["model"] = {{"spheres_per_chain", c.gripper.spheres_per_chain}, {"bellows", bellows}};
  j["plan"] = {{"standoff_mm", c.plan.standoff},
               {"azimuth_deg", c.plan.azimuth_deg},
               {"open_deg", angles_json(c.plan.open)},
               {"pinch_deg", angles_json(c.plan.pinch)}};
  return j;
}

}  // namespace bhg::config
