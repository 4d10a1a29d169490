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

#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "bhg/grasp_plan.h"
#include "bhg/gripper_description.h"
#include "bhg/kinematics.h"
#include "bhg/tracking.h"
#include "bhg/urdf.h"
#include "bhg/vision.h"
#include "fixtures.h"

namespace {

using namespace bhg;

std::vector<kinematics::JointAngles> random_configs(std::size_t n) {
  std::mt19937_64 rng(9);
  const auto l = kinematics::JointLimits::defaults();
  auto u = [&](const kinematics::Interval& i) {
    return std::uniform_real_distribution<double>(i.lower, i.upper)(rng);
  };
  std::vector<kinematics::JointAngles> out(n);
  for (auto& q : out) q = {u(l.theta1), u(l.theta2), u(l.phi)};
  return out;
}

void BM_ForwardKinematics(benchmark::State& state) {
  const auto qs = random_configs(1024);
  const kinematics::LinkGeometry g;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kinematics::forward_kinematics(qs[i++ & 1023], g));
  }
}
BENCHMARK(BM_ForwardKinematics);

void BM_InverseKinematics(benchmark::State& state) {
  const kinematics::LinkGeometry g;
  const auto lim = kinematics::JointLimits::defaults();
  std::vector<kinematics::TipPosition> targets;
  for (const auto& q : random_configs(1024)) targets.push_back(kinematics::forward_kinematics(q, g));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kinematics::inverse_kinematics(targets[i++ & 1023], g, lim));
  }
}
BENCHMARK(BM_InverseKinematics);

void BM_Workspace(benchmark::State& state) {
  const auto lim = kinematics::JointLimits::defaults();
  const double res = static_cast<double>(state.range(0)) * 3.141592653589793 / 180.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(kinematics::workspace_sample(lim, {}, res));
  }
}
BENCHMARK(BM_Workspace)->Arg(5)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_TrackingSchedule(benchmark::State& state) {
  const pneumatics::PlantParams pl;
  const auto sig = pneumatics::sweep_schedule(pneumatics::TrackingGroup::kSwingSame, {});
  const auto init = pneumatics::PneumaticState::at_rest(pl, pl.tank_pressure_max);
  for (auto _ : state) {
    benchmark::DoNotOptimize(pneumatics::run_tracking_test(
        sig, pneumatics::signal_duration(sig), pneumatics::ControllerConfig{}, pl, init));
  }
}
BENCHMARK(BM_TrackingSchedule)->Unit(benchmark::kMillisecond);

void BM_MinEnclosingRect(benchmark::State& state) {
  const auto roi = vision::segment_roi(
      vision::extract_mask(fixtures::render_towel({}), vision::HsvRange{}));
  const auto edges = vision::detect_edges(roi);
  for (auto _ : state) benchmark::DoNotOptimize(vision::min_enclosing_rect(edges));
}
BENCHMARK(BM_MinEnclosingRect)->Unit(benchmark::kMicrosecond);

void BM_DetectionPipeline(benchmark::State& state) {
  const auto img = fixtures::render_towel({});
  vision::DetectionOptions opt;
  opt.edges.method = state.range(0) == 0 ? vision::EdgeMethod::kBoundary : vision::EdgeMethod::kCanny;
  const auto cam = vision::CameraModel::overhead_default();
  for (auto _ : state) benchmark::DoNotOptimize(vision::detect_grasp_points(img, opt, cam));
}
BENCHMARK(BM_DetectionPipeline)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ExportRoundtrip(benchmark::State& state) {
  const auto m = model::GripperModel::defaults();
  for (auto _ : state) {
    const auto d = model::export_description(m, {});
    benchmark::DoNotOptimize(model::read_urdf(model::write_urdf(d)));
  }
}
BENCHMARK(BM_ExportRoundtrip)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
