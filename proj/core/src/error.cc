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

#include "bhg/error.h"

#include <sstream>

namespace bhg {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kLimitViolation: return "limit-violation";
    case ErrorCode::kOutOfWorkspace: return "out-of-workspace";
    case ErrorCode::kSaturation: return "saturation";
    case ErrorCode::kDegenerateDesign: return "degenerate-design";
    case ErrorCode::kInsufficientData: return "insufficient-data";
    case ErrorCode::kNoObject: return "no-object";
    case ErrorCode::kToleranceExceeded: return "tolerance-exceeded";
    case ErrorCode::kStructural: return "structural";
    case ErrorCode::kConsistency: return "consistency";
    case ErrorCode::kConfig: return "config";
    case ErrorCode::kIo: return "io";
  }
  return "unknown";
}

namespace {

std::string limit_message(const std::string& angle, double value, double lower,
                          double upper) {
  std::ostringstream os;
  os << "joint angle " << angle << " = " << value << " rad outside [" << lower
     << ", " << upper << "]";
  return os.str();
}

std::string workspace_message(double distance, double nearest) {
  std::ostringstream os;
  os << "target at planar distance " << distance
     << " mm is unreachable; nearest reachable distance is " << nearest << " mm";
  return os.str();
}

std::string saturation_message(const std::string& channel, double required,
                               double lo, double hi) {
  std::ostringstream os;
  os << "channel " << channel << " needs " << required
     << " kPa; feasible command range is [" << lo << ", " << hi << "] rad";
  return os.str();
}

}  // namespace

LimitViolation::LimitViolation(std::string angle, double value, double lower,
                               double upper)
    : Error(ErrorCode::kLimitViolation,
            limit_message(angle, value, lower, upper)),
      angle_(std::move(angle)),
      value_(value) {}

OutOfWorkspace::OutOfWorkspace(double distance, double nearest_reachable)
    : Error(ErrorCode::kOutOfWorkspace,
            workspace_message(distance, nearest_reachable)),
      distance_(distance),
      nearest_reachable_(nearest_reachable) {}

Saturation::Saturation(std::string channel, double required_kpa,
                       double feasible_lo, double feasible_hi)
    : Error(ErrorCode::kSaturation,
            saturation_message(channel, required_kpa, feasible_lo, feasible_hi)),
      channel_(std::move(channel)),
      required_kpa_(required_kpa),
      feasible_lo_(feasible_lo),
      feasible_hi_(feasible_hi) {}

}  // namespace bhg
