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

#ifndef BHG_TRACKING_H_
#define BHG_TRACKING_H_

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "bhg/pneumatics.h"

namespace bhg::pneumatics {

// One constant-reference cycle. Chambers without a target keep their
// valves closed.
struct ReferenceSegment {
  double interval = 0.0;  // s
  std::array<std::optional<double>, kChamberCount> targets{};
};

using ReferenceSignal = std::vector<ReferenceSegment>;

// Interval schedule: start, start - decrement, ... ; the first interval
// below `floor` is the last one emitted.
struct ScheduleSpec {
  double start_interval = 1.3;  // s
  double decrement = 0.08;      // s
  double floor = 0.2;           // s
  double low_kpa = 10.0;
  double high_kpa = 40.0;

  std::vector<double> intervals() const;
  friend bool operator==(const ScheduleSpec&, const ScheduleSpec&) = default;
};

enum class TrackingGroup {
  kOpenClose = 1,      // both fingers open and close together
  kSwingSame = 2,      // both fingers swing in the same direction
  kSwingOpposite = 3,  // fingers swing in opposite directions
};

std::string_view group_name(TrackingGroup group);

// Square-wave reference for one test group: targets alternate between
// high and low each cycle. Open/close drives the root chambers (2, 6);
// swings drive the lateral pairs (1/3, 5/7) antagonistically.
ReferenceSignal sweep_schedule(TrackingGroup group, const ScheduleSpec& spec);

// Every listed chamber held at `kpa` for `cycles` cycles of `interval`.
ReferenceSignal constant_reference(std::span<const std::size_t> chambers,
                                   double kpa, double interval,
                                   std::size_t cycles);

struct TraceRow {
  double time = 0.0;
  std::array<double, kChamberCount> reference{};  // NaN where undriven
  std::array<double, kChamberCount> measured{};
};

struct CycleReach {
  std::size_t index = 0;
  double start = 0.0;
  double interval = 0.0;
  std::array<std::optional<bool>, kChamberCount> reached{};  // driven only
  bool all_reached = false;
};

struct TrackingResult {
  std::vector<TraceRow> trace;
  std::vector<CycleReach> cycles;

  std::size_t reached_cycle_count() const;
  std::size_t reached_channel_count() const;
};

// Simulates the closed loop over the signal (truncated at `duration`).
// A cycle's channel is reached when its measured pressure lies within the
// deadband of the cycle target after any control period of the cycle.
TrackingResult run_tracking_test(const ReferenceSignal& signal, double duration,
                                 const ControllerConfig& cfg,
                                 const PlantParams& plant,
                                 const PneumaticState& initial);

// Sum of the signal's intervals.
double signal_duration(const ReferenceSignal& signal);

}  // namespace bhg::pneumatics

#endif  // BHG_TRACKING_H_
