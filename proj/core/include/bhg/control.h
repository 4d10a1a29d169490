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

#ifndef BHG_CONTROL_H_
#define BHG_CONTROL_H_

#include <array>
#include <optional>
#include <string_view>
#include <variant>

#include "bhg/kinematics.h"
#include "bhg/pneumatics.h"
#include "bhg/pressure_map.h"

namespace bhg::pneumatics {

// Mode 1: every chamber driven to the same target to close the gripper
// with maximum force.
struct PowerMode {
  double target_kpa = 0.0;
};

// Mode 2: decoupled angle control, one target per finger (A, B).
struct AbAdMode {
  std::array<kinematics::JointAngles, 2> fingers{};

  static AbAdMode both(const kinematics::JointAngles& a) { return {{a, a}}; }
};

// Mode 3: all valves shut, gas locked in every chamber.
struct HoldingMode {};

using ModeCommand = std::variant<PowerMode, AbAdMode, HoldingMode>;

std::string_view mode_name(const ModeCommand& cmd);

// Result of a mode switch. A missing reference leaves the chamber's
// previous reference in place.
struct ChamberCommands {
  std::array<std::optional<double>, kChamberCount> references{};
  bool lock_all = false;
};

// Throws Saturation when an Ab/Ad target is not achievable.
ChamberCommands apply_mode(const ModeCommand& cmd,
                           const pressure::PressureMaps& maps,
                           double lateral_bias = pressure::kDefaultLateralBias);

// Closed pressure loop: bang-bang controller per chamber feeding the
// plant at the control period. Single owner; ticks must be serialized.
class PressureLoop {
 public:
  PressureLoop(const PlantParams& plant, const ControllerConfig& cfg,
               const PneumaticState& initial);

  void apply(const ChamberCommands& commands);
  void set_reference(std::size_t chamber, std::optional<double> kpa);
  // One control period: valve decisions, then one plant step.
  void tick();

  const PneumaticState& state() const { return state_; }
  const std::array<std::optional<double>, kChamberCount>& references() const {
    return references_;
  }
  bool locked() const { return locked_; }
  const ControllerConfig& config() const { return cfg_; }

 private:
  PlantParams plant_;
  ControllerConfig cfg_;
  PneumaticState state_;
  std::array<std::optional<double>, kChamberCount> references_{};
  bool locked_ = false;
};

}  // namespace bhg::pneumatics

#endif  // BHG_CONTROL_H_
