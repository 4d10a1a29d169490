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

#include "bhg/holding.h"

#include <cmath>
#include <string>

#include "bhg/error.h"

namespace bhg::pneumatics {
namespace {

struct LockedGas {
  double a = 0.0;  // absolute kPa*mL
  double b = 0.0;
};

LockedGas locked_gas(const HoldingModel& m) {
  return {(m.pressure_a + m.atmosphere) * m.chamber_volume,
          (m.pressure_b + m.atmosphere) * m.chamber_volume};
}

// Net torque on the joint at deflection `delta` from the held angle.
// Strictly decreasing in delta on the admissible volume range.
double net_torque(double delta, double external, const HoldingModel& m,
                  const LockedGas& gas) {
  const double pa = gas.a / (m.chamber_volume + m.lever * delta);
  const double pb = gas.b / (m.chamber_volume - m.lever * delta);
  const double preload = m.lever * (m.pressure_a - m.pressure_b);
  return m.lever * (pa - pb) - preload - m.joint_stiffness * delta + external;
}

}  // namespace

void HoldingModel::validate() const {
  auto positive = [](const char* name, double v) {
    if (!std::isfinite(v) || v <= 0.0) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(name) + " must be positive and finite");
    }
  };
  positive("chamber_volume", chamber_volume);
  positive("lever", lever);
  positive("atmosphere", atmosphere);
  if (!std::isfinite(joint_stiffness) || joint_stiffness < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "joint_stiffness must be >= 0");
  }
  if (!std::isfinite(pressure_a) || !std::isfinite(pressure_b) ||
      pressure_a + atmosphere <= 0.0 || pressure_b + atmosphere <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "locked pressures must be above vacuum");
  }
  if (!std::isfinite(held_angle)) {
    throw Error(ErrorCode::kInvalidArgument, "held_angle must be finite");
  }
}

double holding_equilibrium(double torque, const HoldingModel& model) {
  model.validate();
  if (!std::isfinite(torque)) {
    throw Error(ErrorCode::kInvalidArgument, "disturbance torque must be finite");
  }
  const LockedGas gas = locked_gas(model);
  const double span = model.chamber_volume / model.lever;
  double lo = -span * (1.0 - 1e-12);
  double hi = span * (1.0 - 1e-12);
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if (net_torque(mid, torque, model, gas) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return model.held_angle + 0.5 * (lo + hi);
}

std::vector<HoldingSample> holding_recovery_test(
    std::span<const DisturbanceSample> disturbance, const HoldingModel& model) {
  model.validate();
  if (!disturbance.empty() && disturbance.back().torque != 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                "disturbance profile must return to zero torque");
  }
  const LockedGas gas = locked_gas(model);
  std::vector<HoldingSample> trace;
  trace.reserve(disturbance.size());
  for (const auto& d : disturbance) {
    HoldingSample s;
    s.time = d.time;
    s.angle = holding_equilibrium(d.torque, model);
    const double delta = s.angle - model.held_angle;
    s.pressure_a = gas.a / (model.chamber_volume + model.lever * delta) - model.atmosphere;
    s.pressure_b = gas.b / (model.chamber_volume - model.lever * delta) - model.atmosphere;
    trace.push_back(s);
  }
  return trace;
}

double linearized_stiffness(const HoldingModel& model) {
  model.validate();
  const double abs_sum = model.pressure_a + model.pressure_b + 2.0 * model.atmosphere;
  return model.lever * model.lever * abs_sum / model.chamber_volume +
         model.joint_stiffness;
}

std::vector<DisturbanceSample> rectangular_pulse(double torque, double t_on,
                                                 double t_off, double duration,
                                                 double dt) {
  if (!(dt > 0.0) || !(duration >= 0.0) || !(t_off >= t_on)) {
    throw Error(ErrorCode::kInvalidArgument, "invalid pulse timing");
  }
  const auto n = static_cast<std::size_t>(std::llround(duration / dt));
  std::vector<DisturbanceSample> out;
  out.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    const double t = static_cast<double>(i) * dt;
    out.push_back({t, (t >= t_on && t < t_off) ? torque : 0.0});
  }
  return out;
}

}  // namespace bhg::pneumatics
