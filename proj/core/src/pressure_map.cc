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

#include "bhg/pressure_map.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "bhg/error.h"

namespace bhg::pressure {
namespace {

void check_range(const char* name, double p, double p_max) {
  if (!std::isfinite(p) || p < 0.0 || p > p_max) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string("pressure ") + name + " = " + std::to_string(p) +
                    " kPa outside [0, " + std::to_string(p_max) + "]");
  }
}

// Feasible command range of `map` when its input is limited to [lo, hi].
void feasible_range(const LinearMap& map, double lo, double hi, double* out_lo,
                    double* out_hi) {
  const double a = map(lo);
  const double b = map(hi);
  *out_lo = std::min(a, b);
  *out_hi = std::max(a, b);
}

}  // namespace

double LinearMap::inverse(double angle) const {
  if (k == 0.0 || !std::isfinite(k)) {
    throw Error(ErrorCode::kInvalidArgument, "linear map slope must be nonzero");
  }
  return (angle - b) / k;
}

kinematics::JointAngles angles_from_pressures(const PressureVector& p,
                                              const PressureMaps& maps) {
  check_range("p0", p.p0, maps.p_max);
  check_range("p1", p.p1, maps.p_max);
  check_range("p2", p.p2, maps.p_max);
  check_range("p3", p.p3, maps.p_max);
  return {maps.distal(p.p0), maps.root(p.p2), maps.lateral(p.lateral_difference())};
}

PressureVector pressures_from_angles(const kinematics::JointAngles& a,
                                     const PressureMaps& maps,
                                     double lateral_bias) {
  const double p_max = maps.p_max;
  const double p0 = maps.distal.inverse(a.theta1);
  const double p2 = maps.root.inverse(a.theta2);
  const double dp = maps.lateral.inverse(a.phi);
  const PressureVector out{p0, lateral_bias + 0.5 * dp, p2, lateral_bias - 0.5 * dp};

  double lo = 0.0;
  double hi = 0.0;
  if (!(p0 >= 0.0 && p0 <= p_max)) {
    feasible_range(maps.distal, 0.0, p_max, &lo, &hi);
    throw Saturation("p0", p0, lo, hi);
  }
  if (!(p2 >= 0.0 && p2 <= p_max)) {
    feasible_range(maps.root, 0.0, p_max, &lo, &hi);
    throw Saturation("p2", p2, lo, hi);
  }
  // Half-difference headroom about the bias, bounded by both 0 and p_max.
  const double headroom = std::min(lateral_bias, p_max - lateral_bias);
  for (const auto& [name, value] : {std::pair{"p1", out.p1}, std::pair{"p3", out.p3}}) {
    if (!(value >= 0.0 && value <= p_max)) {
      feasible_range(maps.lateral, -2.0 * headroom, 2.0 * headroom, &lo, &hi);
      throw Saturation(name, value, lo, hi);
    }
  }
  return out;
}

LinearFit fit_linear_map(std::span<const CalibrationSample> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorCode::kInsufficientData,
                "at least two calibration samples are required");
  }
  const double n = static_cast<double>(samples.size());
  double mean_p = 0.0;
  double mean_a = 0.0;
  for (const auto& s : samples) {
    if (!std::isfinite(s.pressure) || !std::isfinite(s.angle)) {
      throw Error(ErrorCode::kInvalidArgument, "calibration samples must be finite");
    }
    mean_p += s.pressure;
    mean_a += s.angle;
  }
  mean_p /= n;
  mean_a /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const auto& s : samples) {
    const double dx = s.pressure - mean_p;
    sxx += dx * dx;
    sxy += dx * (s.angle - mean_a);
  }
  if (sxx == 0.0) {
    throw Error(ErrorCode::kDegenerateDesign,
                "calibration pressures are all identical");
  }
  LinearFit fit;
  fit.map.k = sxy / sxx;
  fit.map.b = mean_a - fit.map.k * mean_p;
  double rss = 0.0;
  for (const auto& s : samples) {
    const double r = s.angle - fit.map(s.pressure);
    rss += r * r;
  }
  fit.rmse = std::sqrt(rss / n);
  return fit;
}

kinematics::TipPosition fk_from_pressures(const PressureVector& p,
                                          const PressureMaps& maps,
                                          const kinematics::LinkGeometry& geom) {
  return kinematics::forward_kinematics(angles_from_pressures(p, maps), geom);
}

}  // namespace bhg::pressure
