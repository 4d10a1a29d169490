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

#include "bhg/pneumatics.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "bhg/error.h"

namespace bhg::pneumatics {
namespace {

void require_positive(const char* name, double v) {
  if (!std::isfinite(v) || v <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(name) + " must be positive and finite");
  }
}

}  // namespace

void PlantParams::validate() const {
  require_positive("tank_volume", tank_volume);
  require_positive("chamber_volume", chamber_volume);
  require_positive("inflow_coeff", inflow_coeff);
  require_positive("outflow_coeff", outflow_coeff);
  require_positive("tank_pressure_max", tank_pressure_max);
  if (!std::isfinite(pump_rate) || pump_rate < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "pump_rate must be finite and >= 0");
  }
}

void ControllerConfig::validate() const {
  if (!std::isfinite(deadband) || deadband < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "deadband must be >= 0");
  }
  require_positive("control_period", control_period);
}

PneumaticState PneumaticState::at_rest(const PlantParams& plant, double tank_kpa,
                                       std::span<const double> chamber_kpa) {
  plant.validate();
  if (chamber_kpa.size() != 0 && chamber_kpa.size() != kChamberCount) {
    throw Error(ErrorCode::kInvalidArgument, "expected 8 chamber pressures");
  }
  PneumaticState s;
  s.tank_pressure = tank_kpa;
  s.tank_gas = tank_kpa * plant.tank_volume;
  for (std::size_t i = 0; i < kChamberCount; ++i) {
    const double p = chamber_kpa.empty() ? 0.0 : chamber_kpa[i];
    s.chamber_pressures[i] = p;
    s.chamber_gas[i] = p * plant.chamber_volume;
    s.valves[i] = Valve::kClosed;
  }
  return s;
}

double PneumaticState::total_gas() const {
  double total = tank_gas;
  for (double g : chamber_gas) total += g;
  return total;
}

PneumaticState step_plant(const PneumaticState& state, double dt,
                          const PlantParams& plant) {
  if (!std::isfinite(dt) || dt <= 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "dt must be positive and finite");
  }
  plant.validate();

  const double vt = plant.tank_volume;
  const double vc = plant.chamber_volume;
  PneumaticState next = state;
  for (std::size_t i = 0; i < kChamberCount; ++i) {
    switch (state.valves[i]) {
      case Valve::kInflate: {
        const double diff = next.tank_gas / vt - next.chamber_gas[i] / vc;
        if (diff <= 0.0) break;
        const double equalize = diff * vc * vt / (vc + vt);
        const double moved = std::min(plant.inflow_coeff * diff * dt, equalize);
        next.tank_gas -= moved;
        next.chamber_gas[i] += moved;
        next.chamber_pressures[i] = next.chamber_gas[i] / vc;
        break;
      }
      case Valve::kExhaust: {
        const double p = next.chamber_gas[i] / vc;
        if (p <= 0.0) break;
        const double vented =
            std::min(plant.outflow_coeff * p * dt, next.chamber_gas[i]);
        next.chamber_gas[i] -= vented;
        next.chamber_pressures[i] = next.chamber_gas[i] / vc;
        break;
      }
      case Valve::kClosed:
      case Valve::kLocked:
        break;
    }
  }
  if (state.pump_on) {
    const double room = plant.tank_pressure_max * vt - next.tank_gas;
    if (room > 0.0) next.tank_gas += std::min(plant.pump_rate * dt, room);
  }
  next.tank_pressure = next.tank_gas / vt;
  next.time = state.time + dt;
  return next;
}

Valve bang_bang_controller(double reference, double measured,
                           const ControllerConfig& cfg) {
  if (measured < reference - cfg.deadband) return Valve::kInflate;
  if (measured > reference + cfg.deadband) return Valve::kExhaust;
  return Valve::kClosed;
}

}  // namespace bhg::pneumatics
