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

#ifndef BHG_URDF_H_
#define BHG_URDF_H_

#include <string>
#include <string_view>

#include "bhg/gripper_description.h"

namespace bhg::model {

// Deterministic URDF text. Doubles use the shortest representation that
// reads back to the same value.
std::string write_urdf(const GripperDescription& desc);

// Parses documents produced by write_urdf. Throws Error(kStructural) for
// malformed XML or missing attributes.
GripperDescription read_urdf(std::string_view xml);

}  // namespace bhg::model

#endif  // BHG_URDF_H_
