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

#include "bhg/tracking.h"

#include <cmath>
#include <limits>

#include "bhg/control.h"
#include "bhg/error.h"

namespace bhg::pneumatics {

std::vector<double> ScheduleSpec::intervals() const {
  if (!(start_interval > 0.0) || !(decrement > 0.0) || !(floor > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument,
                "schedule start, decrement and floor must be positive");
  }
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double interval = start_interval - decrement * k;
    if (interval <= 0.0) break;
    out.push_back(interval);
    if (interval < floor - 1e-12) break;
  }
  return out;
}

std::string_view group_name(TrackingGroup group) {
  switch (group) {
    case TrackingGroup::kOpenClose: return "open-close";
    case TrackingGroup::kSwingSame: return "swing-same";
    case TrackingGroup::kSwingOpposite: return "swing-opposite";
  }
  return "unknown";
}

ReferenceSignal sweep_schedule(TrackingGroup group, const ScheduleSpec& spec) {
  ReferenceSignal signal;
  const auto intervals = spec.intervals();
  for (std::size_t k = 0; k < intervals.size(); ++k) {
    ReferenceSegment seg;
    seg.interval = intervals[k];
    const bool even = k % 2 == 0;
    const double hi = even ? spec.high_kpa : spec.low_kpa;
    const double lo = even ? spec.low_kpa : spec.high_kpa;
    switch (group) {
      case TrackingGroup::kOpenClose:
        seg.targets[2] = hi;
        seg.targets[6] = hi;
        break;
      case TrackingGroup::kSwingSame:
        seg.targets[1] = hi;
        seg.targets[3] = lo;
        seg.targets[5] = hi;
        seg.targets[7] = lo;
        break;
      case TrackingGroup::kSwingOpposite:
        seg.targets[1] = hi;
        seg.targets[3] = lo;
        seg.targets[5] = lo;
        seg.targets[7] = hi;
        break;
    }
    signal.push_back(seg);
  }
  return signal;
}

ReferenceSignal constant_reference(std::span<const std::size_t> chambers,
                                   double kpa, double interval,
                                   std::size_t cycles) {
  ReferenceSegment seg;
  seg.interval = interval;
  for (std::size_t c : chambers) {
    if (c >= kChamberCount) {
      throw Error(ErrorCode::kInvalidArgument, "chamber index out of range");
    }
    seg.targets[c] = kpa;
  }
  return ReferenceSignal(cycles, seg);
}

double signal_duration(const ReferenceSignal& signal) {
  double total = 0.0;
  for (const auto& s : signal) total += s.interval;
  return total;
}

std::size_t TrackingResult::reached_cycle_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) n += c.all_reached ? 1 : 0;
  return n;
}

std::size_t TrackingResult::reached_channel_count() const {
  std::size_t n = 0;
  for (const auto& c : cycles) {
    for (const auto& r : c.reached) n += (r && *r) ? 1 : 0;
  }
  return n;
}

TrackingResult run_tracking_test(const ReferenceSignal& signal, double duration,
                                 const ControllerConfig& cfg,
                                 const PlantParams& plant,
                                 const PneumaticState& initial) {
  if (!(duration > 0.0)) {
    throw Error(ErrorCode::kInvalidArgument, "duration must be positive");
  }
  cfg.validate();
  PressureLoop loop(plant, cfg, initial);
  const double dt = cfg.control_period;
  const auto total_steps = static_cast<long long>(std::llround(duration / dt));

  TrackingResult result;
  result.trace.reserve(static_cast<std::size_t>(total_steps));
  long long step = 0;
  double start = 0.0;
  for (std::size_t k = 0; k < signal.size() && step < total_steps; ++k) {
    const auto& seg = signal[k];
    for (std::size_t c = 0; c < kChamberCount; ++c) loop.set_reference(c, seg.targets[c]);

    CycleReach reach;
    reach.index = k;
    reach.start = start;
    reach.interval = seg.interval;
    for (std::size_t c = 0; c < kChamberCount; ++c) {
      if (seg.targets[c]) reach.reached[c] = false;
    }
    const auto seg_steps = std::max<long long>(1, std::llround(seg.interval / dt));
    for (long long s = 0; s < seg_steps && step < total_steps; ++s, ++step) {
      loop.tick();
      TraceRow row;
      row.time = static_cast<double>(step + 1) * dt;
      for (std::size_t c = 0; c < kChamberCount; ++c) {
        const double measured = loop.state().chamber_pressures[c];
        row.measured[c] = measured;
        row.reference[c] = seg.targets[c] ? *seg.targets[c]
                                          : std::numeric_limits<double>::quiet_NaN();
        if (seg.targets[c] && std::abs(measured - *seg.targets[c]) <= cfg.deadband) {
          reach.reached[c] = true;
        }
      }
      result.trace.push_back(row);
    }
    reach.all_reached = true;
    for (const auto& r : reach.reached) {
      if (r && !*r) reach.all_reached = false;
    }
    result.cycles.push_back(reach);
    start += seg.interval;
  }
  return result;
}

}  // namespace bhg::pneumatics
