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

#ifndef BHG_PNEUMATICS_H_
#define BHG_PNEUMATICS_H_

#include <array>
#include <cstddef>
#include <span>

namespace bhg::pneumatics {

// Chambers 0-3 belong to finger A and 4-7 to finger B. Within a finger:
// 0 distal, 1 left lateral, 2 middle root, 3 right lateral.
inline constexpr std::size_t kChamberCount = 8;
inline constexpr std::size_t kChambersPerFinger = 4;

enum class Valve {
  kClosed,
  kInflate,  // chamber connected to the tank
  kExhaust,  // chamber vented to atmosphere
  kLocked,   // holding mode: no flow, controller bypassed
};

// Lumped isothermal plant. Gas inventories are in kPa*mL (gauge pressure
// times volume), so pressure = gas / volume.
struct PlantParams {
  double tank_volume = 1000.0;      // mL
  double chamber_volume = 20.0;     // mL, per bellows
  double inflow_coeff = 500.0;      // mL/s: gas rate per kPa of tank-chamber difference
  double outflow_coeff = 333.0;     // mL/s: vent rate per kPa of chamber pressure
  double pump_rate = 20000.0;       // kPa*mL/s
  double tank_pressure_max = 100.0; // kPa

  // Throws InvalidArgument on non-finite or non-positive values.
  void validate() const;
  friend bool operator==(const PlantParams&, const PlantParams&) = default;
};

struct PneumaticState {
  double tank_pressure = 0.0;  // kPa
  double tank_gas = 0.0;
  std::array<double, kChamberCount> chamber_pressures{};  // kPa
  std::array<double, kChamberCount> chamber_gas{};
  std::array<Valve, kChamberCount> valves{};
  bool pump_on = false;
  double time = 0.0;  // s

  // Consistent state at the given pressures, all valves closed.
  static PneumaticState at_rest(const PlantParams& plant, double tank_kpa,
                                std::span<const double> chamber_kpa = {});
  double total_gas() const;
};

// Advances the plant by `dt` seconds. Inflate valves are served in chamber
// order, each transfer capped at pairwise equalization with the tank so a
// chamber is never filled above the tank pressure it draws from. Locked
// chambers are untouched. Throws InvalidArgument for dt <= 0 or bad params.
PneumaticState step_plant(const PneumaticState& state, double dt,
                          const PlantParams& plant);

struct ControllerConfig {
  double deadband = 1.0;          // kPa
  double control_period = 0.001;  // s

  void validate() const;
  friend bool operator==(const ControllerConfig&, const ControllerConfig&) = default;
};

// Bang-bang valve law for one chamber: inflate below reference - deadband,
// exhaust above reference + deadband, otherwise closed.
Valve bang_bang_controller(double reference, double measured,
                           const ControllerConfig& cfg);

}  // namespace bhg::pneumatics

#endif  // BHG_PNEUMATICS_H_
