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

#include "cli.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bhg/compliance.h"
#include "bhg/config.h"
#include "bhg/error.h"
#include "bhg/grasp_plan.h"
#include "bhg/holding.h"
#include "bhg/image.h"
#include "bhg/io.h"
#include "bhg/kinematics.h"
#include "bhg/pressure_map.h"
#include "bhg/tracking.h"
#include "bhg/units.h"
#include "bhg/urdf.h"

namespace bhg::cli {
namespace {

using nlohmann::ordered_json;
using io::format_number;

std::string fmt3(const Eigen::Vector3d& v) {
  return format_number(v.x()) + "," + format_number(v.y()) + "," + format_number(v.z());
}

std::string fmt2(const Eigen::Vector2d& v) {
  return format_number(v.x()) + "," + format_number(v.y());
}

ordered_json vec_json(const Eigen::Vector3d& v) { return {v.x(), v.y(), v.z()}; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

kinematics::JointAngles angles_from_deg(const std::vector<double>& v) {
  return {deg_to_rad(v[0]), deg_to_rad(v[1]), deg_to_rad(v[2])};
}

ordered_json angles_json(const kinematics::JointAngles& a) {
  ordered_json j;
  j["theta1_deg"] = rad_to_deg(a.theta1);
  j["theta2_deg"] = rad_to_deg(a.theta2);
  j["phi_deg"] = rad_to_deg(a.phi);
  return j;
}

std::size_t finger_index(const std::string& f) { return f == "B" || f == "b" ? 1 : 0; }

int exit_code_for(ErrorCode c) {
  switch (c) {
    case ErrorCode::kConfig: return kConfigError;
    case ErrorCode::kIo: return kIoError;
    default: return kModuleError;
  }
}

// Options shared by the subcommands that write a file.
struct Output {
  std::string path;

  void add(CLI::App* sub, const std::string& what) {
    sub->add_option("-o,--out", path, "Write " + what + " to this path");
  }
  void write(const std::string& content) const {
    if (!path.empty()) io::write_file_atomic(path, content);
  }
};

struct Args {
  std::string config_path;

  // fk / ik
  double theta1 = 0.0, theta2 = 0.0, phi = 0.0;
  double x = 0.0, y = 0.0, z = 0.0;
  std::string finger = "A";
  bool gripper_frame = false;
  Output fk_out, ik_out;

  // workspace
  double resolution_deg = 5.0;
  Output ws_out;

  // calibrate / map
  std::string data_path;
  std::string channel = "distal";
  Output cal_out;
  std::vector<double> pressures;
  std::vector<double> map_angles;
  Output map_out;

  // simulate / track / hold
  double target_kpa = 40.0;
  std::vector<int> chambers{0, 1, 2, 3, 4, 5, 6, 7};
  double sim_duration = 1.0;
  double tank_kpa = -1.0;
  int every = 1;
  Output sim_out;
  std::string schedule = "sweep";
  int group = 1;
  std::string report_path;
  Output track_out;
  double torque = 500.0, t_on = 0.2, t_off = 0.6, hold_duration = 1.0, hold_dt = 0.01;
  Output hold_out;

  // compliance
  double displacement = 10.0;
  double step = 0.5;
  Output chain_out, payload_out, tol_out;
  std::vector<double> tol_angles;

  // vision
  std::string image_path;
  Output detect_out;
  std::vector<double> point;
  double approach_deg = 45.0;
  double overpress = 25.0;
  double margin = 0.0;
  bool allow_overpress = false;
  Output plan_out;

  // export
  std::vector<double> angles_a{0.0, 0.0, 0.0};
  std::vector<double> angles_b{0.0, 0.0, 0.0};
  Output export_out;

  Output config_out;
};

using Handler = std::function<void(const config::ToolkitConfig&, const Args&, std::ostream&)>;

void cmd_fk(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto& geom = cfg.finger(finger_index(a.finger));
  const kinematics::JointAngles q{deg_to_rad(a.theta1), deg_to_rad(a.theta2), deg_to_rad(a.phi)};
  auto tip = kinematics::forward_kinematics(q, geom, cfg.limits());
  if (a.gripper_frame) tip = kinematics::to_gripper_frame(tip, geom);
  out << "tip_mm " << fmt3(tip.vec()) << "\n";
  ordered_json j;
  j["finger"] = finger_index(a.finger) == 0 ? "A" : "B";
  j["frame"] = a.gripper_frame ? "gripper" : "finger";
  j["angles"] = angles_json(q);
  j["tip_mm"] = vec_json(tip.vec());
  a.fk_out.write(dump(j));
}

void cmd_ik(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto& geom = cfg.finger(finger_index(a.finger));
  const auto q = kinematics::inverse_kinematics({a.x, a.y, a.z}, geom, cfg.limits());
  out << "angles_deg " << format_number(rad_to_deg(q.theta1)) << ","
      << format_number(rad_to_deg(q.theta2)) << "," << format_number(rad_to_deg(q.phi))
      << "\n";
  ordered_json j;
  j["finger"] = finger_index(a.finger) == 0 ? "A" : "B";
  j["target_mm"] = {a.x, a.y, a.z};
  j["angles"] = angles_json(q);
  a.ik_out.write(dump(j));
}

void cmd_workspace(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto& geom = cfg.finger(finger_index(a.finger));
  const auto cloud = kinematics::workspace_sample(cfg.limits(), geom, deg_to_rad(a.resolution_deg));
  io::CsvTable t;
  t.header = {"x", "y", "z"};
  t.rows.reserve(cloud.size());
  double rmin = INFINITY, rmax = 0.0;
  for (const auto& p : cloud) {
    t.rows.push_back({p.x, p.y, p.z});
    const double r = p.vec().norm();
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
  }
  a.ws_out.write(io::format_csv(t));
  out << "workspace points " << cloud.size() << " radius_mm [" << format_number(rmin) << ", "
      << format_number(rmax) << "]\n";
}

void cmd_calibrate(const config::ToolkitConfig&, const Args& a, std::ostream& out) {
  const io::CsvTable t = io::parse_csv(io::read_file(a.data_path));
  const std::size_t pc = t.column("pressure_kPa");
  const std::size_t ac = t.column("angle_deg");
  std::vector<pressure::CalibrationSample> samples;
  samples.reserve(t.rows.size());
  for (const auto& r : t.rows) samples.push_back({r[pc], deg_to_rad(r[ac])});
  const auto fit = pressure::fit_linear_map(samples);
  char rmse[32];
  std::snprintf(rmse, sizeof(rmse), "%.3f", rad_to_deg(fit.rmse));
  out << a.channel << " k=" << format_number(fit.map.k) << " rad/kPa b="
      << format_number(fit.map.b) << " rad rmse=" << rmse << " deg n=" << samples.size()
      << "\n";
  ordered_json j;
  j["channel"] = a.channel;
  j["samples"] = samples.size();
  j["k_rad_per_kPa"] = fit.map.k;
  j["b_rad"] = fit.map.b;
  j["rmse_rad"] = fit.rmse;
  j["rmse_deg"] = rad_to_deg(fit.rmse);
  a.cal_out.write(dump(j));
}

void cmd_map(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  if (a.pressures.empty() == a.map_angles.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --pressures or --angles");
  }
  const auto& geom = cfg.finger(finger_index(a.finger));
  pressure::PressureVector p;
  kinematics::JointAngles q;
  if (!a.pressures.empty()) {
    p = {a.pressures[0], a.pressures[1], a.pressures[2], a.pressures[3]};
    q = pressure::angles_from_pressures(p, cfg.maps);
  } else {
    q = angles_from_deg(a.map_angles);
    p = pressure::pressures_from_angles(q, cfg.maps, cfg.lateral_bias);
  }
  const auto tip = kinematics::forward_kinematics(q, geom);
  out << "pressures_kPa " << format_number(p.p0) << "," << format_number(p.p1) << ","
      << format_number(p.p2) << "," << format_number(p.p3) << " angles_deg "
      << format_number(rad_to_deg(q.theta1)) << "," << format_number(rad_to_deg(q.theta2))
      << "," << format_number(rad_to_deg(q.phi)) << " tip_mm " << fmt3(tip.vec()) << "\n";
  ordered_json j;
  j["pressures_kPa"] = {p.p0, p.p1, p.p2, p.p3};
  j["angles"] = angles_json(q);
  j["tip_mm"] = vec_json(tip.vec());
  a.map_out.write(dump(j));
}

std::string trace_csv(const pneumatics::TrackingResult& r, int every) {
  std::string s = "time_s";
  for (std::size_t c = 0; c < pneumatics::kChamberCount; ++c) s += ",ref" + std::to_string(c);
  for (std::size_t c = 0; c < pneumatics::kChamberCount; ++c) s += ",p" + std::to_string(c);
  s += '\n';
  for (std::size_t i = 0; i < r.trace.size(); i += static_cast<std::size_t>(every)) {
    const auto& row = r.trace[i];
    s += format_number(row.time);
    for (double v : row.reference) s += "," + (std::isnan(v) ? std::string() : format_number(v));
    for (double v : row.measured) s += "," + format_number(v);
    s += '\n';
  }
  return s;
}

pneumatics::PneumaticState initial_state(const config::ToolkitConfig& cfg, double tank_kpa) {
  return pneumatics::PneumaticState::at_rest(
      cfg.plant, tank_kpa < 0.0 ? cfg.plant.tank_pressure_max : tank_kpa);
}

void cmd_simulate(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  std::vector<std::size_t> ch;
  for (int c : a.chambers) {
    if (c < 0 || c >= static_cast<int>(pneumatics::kChamberCount)) {
      throw Error(ErrorCode::kInvalidArgument, "chamber index out of range: " + std::to_string(c));
    }
    ch.push_back(static_cast<std::size_t>(c));
  }
  const auto signal = pneumatics::constant_reference(ch, a.target_kpa, a.sim_duration, 1);
  const auto r = pneumatics::run_tracking_test(signal, a.sim_duration, cfg.controller, cfg.plant,
                                               initial_state(cfg, a.tank_kpa));
  a.sim_out.write(trace_csv(r, a.every));
  const auto& last = r.trace.back();
  double worst = 0.0;
  for (auto c : ch) worst = std::max(worst, std::abs(last.measured[c] - a.target_kpa));
  out << "simulate " << ch.size() << " chambers to " << format_number(a.target_kpa)
      << " kPa: final max error " << format_number(worst) << " kPa, reached "
      << (r.reached_cycle_count() == 1 ? "yes" : "no") << "\n";
}

void cmd_track(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  if (a.schedule != "sweep") {
    throw Error(ErrorCode::kInvalidArgument, "unknown schedule '" + a.schedule + "'");
  }
  const auto group = static_cast<pneumatics::TrackingGroup>(a.group);
  const auto signal = pneumatics::sweep_schedule(group, cfg.schedule);
  const auto r = pneumatics::run_tracking_test(signal, pneumatics::signal_duration(signal),
                                               cfg.controller, cfg.plant,
                                               initial_state(cfg, a.tank_kpa));
  ordered_json rep;
  rep["schedule"] = a.schedule;
  rep["group"] = std::string(pneumatics::group_name(group));
  std::size_t at_floor = 0, at_floor_ok = 0;
  ordered_json cycles = ordered_json::array();
  for (const auto& c : r.cycles) {
    ordered_json cj;
    cj["index"] = c.index;
    cj["start_s"] = c.start;
    cj["interval_s"] = c.interval;
    cj["frequency_hz"] = 1.0 / c.interval;
    cj["reached"] = c.all_reached;
    cycles.push_back(cj);
    if (c.interval >= cfg.schedule.floor - 1e-12) {
      ++at_floor;
      if (c.all_reached) ++at_floor_ok;
    }
  }
  rep["cycles"] = cycles;
  rep["cycles_at_or_above_floor"] = at_floor;
  rep["reached_at_or_above_floor"] = at_floor_ok;
  if (!a.report_path.empty()) io::write_file_atomic(a.report_path, dump(rep));
  a.track_out.write(trace_csv(r, a.every));
  out << "track " << pneumatics::group_name(group) << ": " << at_floor_ok << "/" << at_floor
      << " cycles with interval >= " << format_number(cfg.schedule.floor)
      << " s reached; " << r.reached_cycle_count() << "/" << r.cycles.size() << " overall\n";
}

void cmd_hold(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto dist =
      pneumatics::rectangular_pulse(a.torque, a.t_on, a.t_off, a.hold_duration, a.hold_dt);
  const auto trace = pneumatics::holding_recovery_test(dist, cfg.holding);
  std::string s = "time_s,torque_Nmm,angle_deg,pressure_a_kPa,pressure_b_kPa\n";
  double peak = 0.0;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    const auto& h = trace[i];
    s += format_number(h.time) + "," + format_number(dist[i].torque) + "," +
         format_number(rad_to_deg(h.angle)) + "," + format_number(h.pressure_a) + "," +
         format_number(h.pressure_b) + "\n";
    peak = std::max(peak, std::abs(h.angle - cfg.holding.held_angle));
  }
  a.hold_out.write(s);
  const double final_err = std::abs(trace.back().angle - cfg.holding.held_angle);
  out << "hold peak deflection " << format_number(rad_to_deg(peak)) << " deg, final error "
      << format_number(final_err) << " rad, stiffness "
      << format_number(pneumatics::linearized_stiffness(cfg.holding)) << " N*mm/rad\n";
}

void cmd_chain_stress(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  using compliance::CompliantEnds;
  const std::array<CompliantEnds, 4> ends = {CompliantEnds::kBoth, CompliantEnds::kPullingOnly,
                                             CompliantEnds::kReceivingOnly,
                                             CompliantEnds::kNeither};
  std::array<std::vector<compliance::ForcePoint>, 4> curves;
  for (std::size_t i = 0; i < 4; ++i) {
    curves[i] = compliance::closed_chain_force({a.displacement, ends[i], a.step}, cfg.stiffness);
  }
  io::CsvTable t;
  t.header = {"displacement_mm"};
  for (auto e : ends) t.header.push_back("force_" + std::string(compliance::ends_name(e)) + "_N");
  for (std::size_t r = 0; r < curves[0].size(); ++r) {
    std::vector<double> row{curves[0][r].displacement};
    for (const auto& c : curves) row.push_back(c[r].force);
    t.rows.push_back(std::move(row));
  }
  a.chain_out.write(io::format_csv(t));
  const double both = curves[0].back().force;
  const double one = curves[1].back().force;
  const double neither = curves[3].back().force;
  out << "chain-stress at " << format_number(a.displacement) << " mm: both "
      << format_number(both) << " N, one-sided " << format_number(one) << " N, neither "
      << format_number(neither) << " N; both/one " << format_number(both / one)
      << ", both/neither " << format_number(both / neither) << "\n";
}

void cmd_payload(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const double on = compliance::payload_envelope(true, cfg.stiffness, cfg.grasp);
  const double off = compliance::payload_envelope(false, cfg.stiffness, cfg.grasp);
  ordered_json j;
  j["enabled_N"] = on;
  j["disabled_N"] = off;
  j["ratio"] = on / off;
  a.payload_out.write(dump(j));
  out << "payload enabled " << format_number(on) << " N, disabled " << format_number(off)
      << " N, ratio " << format_number(on / off) << "\n";
}

void cmd_tolerance(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  std::vector<double> grid = a.tol_angles;
  if (grid.empty()) grid.assign(compliance::kApproachGridDeg.begin(), compliance::kApproachGridDeg.end());
  io::CsvTable t;
  t.header = {"angle_deg", "tolerance_mm"};
  double best = -1.0, best_angle = 0.0, worst = INFINITY;
  for (double deg : grid) {
    const double tol = compliance::poke_tolerance(deg, cfg.stiffness, cfg.poke);
    t.rows.push_back({deg, tol});
    if (tol > best) {
      best = tol;
      best_angle = deg;
    }
    worst = std::min(worst, tol);
  }
  a.tol_out.write(io::format_csv(t));
  out << "tolerance max " << format_number(best) << " mm at " << format_number(best_angle)
      << " deg, min " << format_number(worst) << " mm\n";
}

vision::Detection run_detection(const config::ToolkitConfig& cfg, const std::string& path) {
  const auto img = vision::read_image(path);
  return vision::detect_grasp_points(img, cfg.detection, cfg.camera);
}

void cmd_detect(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto det = run_detection(cfg, a.image_path);
  a.detect_out.write(dump(vision::to_json(det)));
  out << "grasp_px " << fmt2(det.grasp_pixels[0]) << " " << fmt2(det.grasp_pixels[1])
      << " world_mm " << fmt3(det.grasp_world[0]) << " " << fmt3(det.grasp_world[1]) << "\n";
}

void cmd_plan(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  if (a.image_path.empty() == a.point.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "give exactly one of --image or --point");
  }
  Eigen::Vector3d target;
  if (!a.point.empty()) {
    target = {a.point[0], a.point[1], a.point[2]};
  } else {
    const auto det = run_detection(cfg, a.image_path);
    target = det.grasp_world[0];
  }
  auto opts = cfg.plan_options();
  opts.enforce_overpress_range = !a.allow_overpress;
  const auto plan = vision::plan_poke_and_pinch(target, a.approach_deg, a.overpress, a.margin, opts);
  a.plan_out.write(dump(vision::to_json(plan)));
  out << "plan target " << fmt3(plan.waypoints.back().position) << " mm, tolerance "
      << format_number(plan.tolerance) << " mm at " << format_number(plan.approach_angle)
      << " deg, " << plan.mode_schedule.size() << " mode switches\n";
}

void cmd_export(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  const auto desc = model::export_description(
      cfg.gripper, {angles_from_deg(a.angles_a), angles_from_deg(a.angles_b)});
  a.export_out.write(model::write_urdf(desc));
  out << "export links " << desc.links.size() << " joints " << desc.joints.size()
      << " chains " << desc.chains.size() << " spheres " << desc.sphere_count() << "\n";
}

void cmd_config(const config::ToolkitConfig& cfg, const Args& a, std::ostream& out) {
  a.config_out.write(dump(config::to_json(cfg)));
  out << "config ok\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Kinematics, pneumatics, compliance, vision and export tools for a two-finger "
               "bellows gripper",
               "bhg"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_option("-c,--config", a.config_path, "JSON configuration file")
      ->check(CLI::ExistingFile);

  std::vector<std::pair<CLI::App*, Handler>> subs;
  auto add = [&](const std::string& name, const std::string& desc, Handler h) {
    CLI::App* s = app.add_subcommand(name, desc);
    subs.emplace_back(s, std::move(h));
    return s;
  };
  auto finger_opt = [&](CLI::App* s) {
    s->add_option("--finger", a.finger, "Finger A or B")
        ->check(CLI::IsMember({"A", "B", "a", "b"}));
  };
  auto triple = [](CLI::App* s, const std::string& name, std::vector<double>& v,
                   const std::string& desc) {
    s->add_option(name, v, desc)->expected(3)->delimiter(',');
  };

  auto* fk = add("fk", "Tip position from joint angles", cmd_fk);
  fk->add_option("--theta1", a.theta1, "Proximal flexion (deg)");
  fk->add_option("--theta2", a.theta2, "Distal flexion (deg)");
  fk->add_option("--phi", a.phi, "Lateral rotation (deg)");
  fk->add_flag("--gripper-frame", a.gripper_frame, "Report in the gripper base frame");
  finger_opt(fk);
  a.fk_out.add(fk, "a JSON result");

  auto* ik = add("ik", "Joint angles for a tip position (finger frame, mm)", cmd_ik);
  ik->add_option("--x", a.x)->required();
  ik->add_option("--y", a.y)->required();
  ik->add_option("--z", a.z)->required();
  finger_opt(ik);
  a.ik_out.add(ik, "a JSON result");

  auto* ws = add("workspace", "Sample the reachable tip cloud", cmd_workspace);
  ws->add_option("--resolution", a.resolution_deg, "Grid step per angle (deg)");
  finger_opt(ws);
  a.ws_out.add(ws, "the x,y,z CSV");

  auto* cal = add("calibrate", "Fit a linear pressure-to-angle map", cmd_calibrate);
  cal->add_option("--data", a.data_path, "CSV with pressure_kPa,angle_deg")
      ->required()
      ->check(CLI::ExistingFile);
  cal->add_option("--channel", a.channel, "Label for the report")
      ->check(CLI::IsMember({"distal", "root", "lateral"}));
  a.cal_out.add(cal, "the fitted map as JSON");

  auto* map = add("map", "Pressures to angles and tip, or angles to pressures", cmd_map);
  map->add_option("--pressures", a.pressures, "p0,p1,p2,p3 (kPa)")->expected(4)->delimiter(',');
  triple(map, "--angles", a.map_angles, "theta1,theta2,phi (deg)");
  finger_opt(map);
  a.map_out.add(map, "a JSON result");

  auto* sim = add("simulate", "Closed-loop step response of selected chambers", cmd_simulate);
  sim->add_option("--target", a.target_kpa, "Reference pressure (kPa)");
  sim->add_option("--chambers", a.chambers, "Chamber indices 0-7")->delimiter(',');
  sim->add_option("--duration", a.sim_duration, "Seconds")->check(CLI::PositiveNumber);
  sim->add_option("--tank", a.tank_kpa, "Initial tank pressure (kPa); default full");
  sim->add_option("--every", a.every, "Keep every n-th trace row")->check(CLI::PositiveNumber);
  a.sim_out.add(sim, "the pressure trace CSV");

  auto* tr = add("track", "Square-wave tracking test with shrinking intervals", cmd_track);
  tr->add_option("--schedule", a.schedule, "Reference schedule")
      ->check(CLI::IsMember({"sweep"}));
  tr->add_option("--group", a.group, "1 open/close, 2 swing same, 3 swing opposite")
      ->check(CLI::Range(1, 3));
  tr->add_option("--tank", a.tank_kpa, "Initial tank pressure (kPa); default full");
  tr->add_option("--every", a.every, "Keep every n-th trace row")->check(CLI::PositiveNumber);
  tr->add_option("--report", a.report_path, "Write the per-cycle reach report (JSON)");
  a.track_out.add(tr, "the pressure trace CSV");

  auto* hold = add("hold", "Locked-joint response to a rectangular torque pulse", cmd_hold);
  hold->add_option("--torque", a.torque, "Pulse torque (N*mm)");
  hold->add_option("--t-on", a.t_on, "Pulse start (s)");
  hold->add_option("--t-off", a.t_off, "Pulse end (s)");
  hold->add_option("--duration", a.hold_duration, "Seconds");
  hold->add_option("--dt", a.hold_dt, "Sample step (s)");
  a.hold_out.add(hold, "the angle trace CSV");

  auto* cs = add("chain-stress", "Closed-chain force for each compliant-end case",
                 cmd_chain_stress);
  cs->add_option("--displacement", a.displacement, "Displacement error (mm)");
  cs->add_option("--step", a.step, "Curve step (mm)");
  a.chain_out.add(cs, "the force curves CSV");

  auto* pl = add("payload", "Pull-out force with and without the lateral DOF", cmd_payload);
  a.payload_out.add(pl, "a JSON result");

  auto* tol = add("tolerance", "Poke tolerance over approach angles", cmd_tolerance);
  tol->add_option("--angles", a.tol_angles, "Approach angles (deg)")->delimiter(',');
  a.tol_out.add(tol, "the tolerance CSV");

  auto* det = add("detect", "Grasp points from a towel image", cmd_detect);
  det->add_option("--image", a.image_path, "PNG or PPM image")->required()->check(CLI::ExistingFile);
  a.detect_out.add(det, "the detection as JSON");

  auto* plan = add("plan", "Poke-and-pinch waypoints and mode schedule", cmd_plan);
  plan->add_option("--image", a.image_path, "Detect the grasp point in this image")
      ->check(CLI::ExistingFile);
  triple(plan, "--point", a.point, "Grasp point x,y,z (mm, world)");
  plan->add_option("--angle", a.approach_deg, "Approach angle (deg)");
  plan->add_option("--overpress", a.overpress, "Over-press depth (mm)");
  plan->add_option("--margin", a.margin, "Vertical position error margin (mm)");
  plan->add_flag("--allow-any-overpress", a.allow_overpress, "Skip the 20-30 mm range check");
  a.plan_out.add(plan, "the plan as JSON");

  auto* ex = add("export", "Write the gripper description as URDF", cmd_export);
  triple(ex, "--angles-a", a.angles_a, "Finger A theta1,theta2,phi (deg)");
  triple(ex, "--angles-b", a.angles_b, "Finger B theta1,theta2,phi (deg)");
  a.export_out.add(ex, "the URDF document");

  auto* cf = add("config", "Validate and print the effective configuration", cmd_config);
  a.config_out.add(cf, "the effective configuration as JSON");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    // help() follows the parsed subcommand chain.
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error[usage]: " << e.what() << "\n";
    return kUsage;
  }

  try {
    const config::ToolkitConfig cfg =
        a.config_path.empty() ? config::ToolkitConfig{} : config::load_config(a.config_path);
    for (const auto& [s, h] : subs) {
      if (s->parsed()) {
        h(cfg, a, out);
        return kOk;
      }
    }
  } catch (const Error& e) {
    err << "error[" << error_code_name(e.code()) << "]: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error[internal]: " << e.what() << "\n";
    return kModuleError;
  }
  return kUsage;
}

}  // namespace bhg::cli
