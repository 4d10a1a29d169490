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

#ifndef BHG_TOOLS_FIXTURES_H_
#define BHG_TOOLS_FIXTURES_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "bhg/image.h"
#include "bhg/io.h"
#include "bhg/pressure_map.h"

namespace bhg::fixtures {

// Flat-colored rectangle on a plain background. A pixel is filled when its
// center lies inside the rectangle.
struct TowelSpec {
  int width = 640;
  int height = 480;
  Eigen::Vector2d center{352.0, 231.0};
  Eigen::Vector2d half_extents{150.0, 95.0};  // long, short
  double angle = 0.349;                       // rad, long axis from +x
  vision::Rgb fill{30, 60, 200};
  vision::Rgb background{200, 190, 170};
};

vision::RgbImage render_towel(const TowelSpec& spec);

// Adds a filled disc of the given color (used for small distractors).
void draw_disc(vision::RgbImage& img, const Eigen::Vector2d& center, double radius,
               vision::Rgb color);

enum class Channel { kDistal, kRoot, kLateral };

const char* channel_name(Channel c);

// Samples angle = k * p + b plus Gaussian noise, then rescales the fit
// residuals so the least-squares RMSE equals target_rmse_deg exactly.
// Pressures span [0, p_max] (distal, root) or [-bias, bias] (lateral).
std::vector<pressure::CalibrationSample> calibration_samples(Channel channel,
                                                             const pressure::PressureMaps& maps,
                                                             double target_rmse_deg,
                                                             std::uint64_t seed,
                                                             std::size_t count = 31);

io::CsvTable calibration_table(const std::vector<pressure::CalibrationSample>& samples);

// towel.png, calibration_{distal,root,lateral}.csv and default_config.json.
void write_fixtures(const std::filesystem::path& dir, std::uint64_t seed);

}  // namespace bhg::fixtures

#endif  // BHG_TOOLS_FIXTURES_H_
