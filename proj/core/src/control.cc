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

#include "bhg/control.h"

#include "bhg/error.h"

namespace bhg::pneumatics {

std::string_view mode_name(const ModeCommand& cmd) {
  struct Visitor {
    std::string_view operator()(const PowerMode&) const { return "power"; }
    std::string_view operator()(const AbAdMode&) const { return "abad"; }
    std::string_view operator()(const HoldingMode&) const { return "holding"; }
  };
  return std::visit(Visitor{}, cmd);
}

ChamberCommands apply_mode(const ModeCommand& cmd,
                           const pressure::PressureMaps& maps,
                           double lateral_bias) {
  ChamberCommands out;
  if (const auto* power = std::get_if<PowerMode>(&cmd)) {
    for (auto& r : out.references) r = power->target_kpa;
  } else if (const auto* abad = std::get_if<AbAdMode>(&cmd)) {
    for (std::size_t f = 0; f < 2; ++f) {
      const auto p = pressure::pressures_from_angles(abad->fingers[f], maps, lateral_bias);
      const std::size_t base = f * kChambersPerFinger;
      out.references[base + 0] = p.p0;
      out.references[base + 1] = p.p1;
      out.references[base + 2] = p.p2;
      out.references[base + 3] = p.p3;
    }
  } else {
    out.lock_all = true;
  }
  return out;
}

PressureLoop::PressureLoop(const PlantParams& plant, const ControllerConfig& cfg,
                           const PneumaticState& initial)
    : plant_(plant), cfg_(cfg), state_(initial) {
  plant_.validate();
  cfg_.validate();
  state_.pump_on = true;
}

void PressureLoop::apply(const ChamberCommands& commands) {
  for (std::size_t i = 0; i < kChamberCount; ++i) {
    if (commands.references[i]) references_[i] = commands.references[i];
  }
  locked_ = commands.lock_all;
  for (auto& v : state_.valves) v = locked_ ? Valve::kLocked : Valve::kClosed;
}

void PressureLoop::set_reference(std::size_t chamber, std::optional<double> kpa) {
  if (chamber >= kChamberCount) {
    throw Error(ErrorCode::kInvalidArgument, "chamber index out of range");
  }
  references_[chamber] = kpa;
}

void PressureLoop::tick() {
  for (std::size_t i = 0; i < kChamberCount; ++i) {
    if (locked_) {
      state_.valves[i] = Valve::kLocked;
    } else if (references_[i]) {
      state_.valves[i] =
          bang_bang_controller(*references_[i], state_.chamber_pressures[i], cfg_);
    } else {
      state_.valves[i] = Valve::kClosed;
    }
  }
  state_ = step_plant(state_, cfg_.control_period, plant_);
}

}  // namespace bhg::pneumatics
