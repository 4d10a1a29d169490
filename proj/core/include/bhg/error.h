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

#ifndef BHG_ERROR_H_
#define BHG_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace bhg {

// Machine-readable failure categories. The CLI maps these onto exit codes.
enum class ErrorCode {
  kInvalidArgument,
  kLimitViolation,
  kOutOfWorkspace,
  kSaturation,
  kDegenerateDesign,
  kInsufficientData,
  kNoObject,
  kToleranceExceeded,
  kStructural,
  kConsistency,
  kConfig,
  kIo,
};

// Stable kebab-case name of a code, e.g. "limit-violation".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// A joint angle outside its configured interval.
class LimitViolation : public Error {
 public:
  LimitViolation(std::string angle, double value, double lower, double upper);

  const std::string& angle() const { return angle_; }
  double value() const { return value_; }

 private:
  std::string angle_;
  double value_;
};

// An IK target outside the reachable shell. `nearest_reachable` is the
// closest reachable planar distance from the proximal joint (mm).
class OutOfWorkspace : public Error {
 public:
  OutOfWorkspace(double distance, double nearest_reachable);

  double distance() const { return distance_; }
  double nearest_reachable() const { return nearest_reachable_; }

 private:
  double distance_;
  double nearest_reachable_;
};

// A commanded angle that needs a pressure outside [0, p_max].
class Saturation : public Error {
 public:
  Saturation(std::string channel, double required_kpa, double feasible_lo,
             double feasible_hi);

  const std::string& channel() const { return channel_; }
  double required_kpa() const { return required_kpa_; }
  // Feasible range of the commanded quantity (rad) for this channel.
  double feasible_lo() const { return feasible_lo_; }
  double feasible_hi() const { return feasible_hi_; }

 private:
  std::string channel_;
  double required_kpa_;
  double feasible_lo_;
  double feasible_hi_;
};

}  // namespace bhg

#endif  // BHG_ERROR_H_
