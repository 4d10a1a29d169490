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

#include "fixtures.h"

#include <cmath>
#include <random>

#include "bhg/config.h"
#include "bhg/error.h"
#include "bhg/units.h"

namespace bhg::fixtures {

vision::RgbImage render_towel(const TowelSpec& spec) {
  vision::RgbImage img = vision::RgbImage::filled(spec.width, spec.height, spec.background);
  const double c = std::cos(spec.angle);
  const double s = std::sin(spec.angle);
  for (int y = 0; y < spec.height; ++y) {
    for (int x = 0; x < spec.width; ++x) {
      const double dx = x - spec.center.x();
      const double dy = y - spec.center.y();
      const double u = c * dx + s * dy;
      const double v = -s * dx + c * dy;
      if (std::abs(u) <= spec.half_extents.x() && std::abs(v) <= spec.half_extents.y()) {
        img.set(x, y, spec.fill);
      }
    }
  }
  return img;
}

void draw_disc(vision::RgbImage& img, const Eigen::Vector2d& center, double radius,
               vision::Rgb color) {
  for (int y = 0; y < img.height; ++y) {
    for (int x = 0; x < img.width; ++x) {
      if ((Eigen::Vector2d(x, y) - center).norm() <= radius) img.set(x, y, color);
    }
  }
}

const char* channel_name(Channel c) {
  switch (c) {
    case Channel::kDistal: return "distal";
    case Channel::kRoot: return "root";
    case Channel::kLateral: return "lateral";
  }
  return "?";
}

std::vector<pressure::CalibrationSample> calibration_samples(Channel channel,
                                                             const pressure::PressureMaps& maps,
                                                             double target_rmse_deg,
                                                             std::uint64_t seed,
                                                             std::size_t count) {
  if (count < 3) throw Error(ErrorCode::kInvalidArgument, "need at least 3 samples");
  const pressure::LinearMap& truth = channel == Channel::kDistal ? maps.distal
                                     : channel == Channel::kRoot ? maps.root
                                                                 : maps.lateral;
  double lo = 0.0, hi = maps.p_max;
  if (channel == Channel::kLateral) {
    const double span = std::min(pressure::kDefaultLateralBias,
                                 maps.p_max - pressure::kDefaultLateralBias);
    lo = -span;
    hi = span;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> noise(0.0, deg_to_rad(target_rmse_deg));
  std::vector<pressure::CalibrationSample> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double p = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
    out[i] = {p, truth(p) + noise(rng)};
  }
  const auto fit = pressure::fit_linear_map(out);
  const double scale = deg_to_rad(target_rmse_deg) / fit.rmse;
  for (auto& s : out) {
    const double model = fit.map(s.pressure);
    s.angle = model + (s.angle - model) * scale;
  }
  return out;
}

io::CsvTable calibration_table(const std::vector<pressure::CalibrationSample>& samples) {
  io::CsvTable t;
  t.header = {"pressure_kPa", "angle_deg"};
  for (const auto& s : samples) t.rows.push_back({s.pressure, rad_to_deg(s.angle)});
  return t;
}

void write_fixtures(const std::filesystem::path& dir, std::uint64_t seed) {
  std::filesystem::create_directories(dir);
  TowelSpec spec;
  vision::RgbImage img = render_towel(spec);
  draw_disc(img, {80.0, 400.0}, 12.0, spec.fill);  // smaller blue blob to be ignored
  const auto png = vision::encode_png(img);
  io::write_file_atomic(dir / "towel.png",
                        std::string_view(reinterpret_cast<const char*>(png.data()), png.size()));

  const pressure::PressureMaps maps;
  // Per-channel residual RMSE of the reference measurements (deg).
  const struct {
    Channel channel;
    double rmse_deg;
  } channels[] = {{Channel::kDistal, 5.151}, {Channel::kRoot, 1.202}, {Channel::kLateral, 2.122}};
  for (const auto& [ch, rmse] : channels) {
    const auto samples = calibration_samples(ch, maps, rmse, seed + static_cast<int>(ch));
    io::write_file_atomic(dir / (std::string("calibration_") + channel_name(ch) + ".csv"),
                          io::format_csv(calibration_table(samples)));
  }
  io::write_file_atomic(dir / "default_config.json",
                        config::to_json(config::ToolkitConfig{}).dump(2) + "\n");
}

}  // namespace bhg::fixtures
