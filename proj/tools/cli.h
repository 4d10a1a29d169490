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

#ifndef BHG_TOOLS_CLI_H_
#define BHG_TOOLS_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace bhg::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kUsage = 2,
  kConfigError = 3,
  kModuleError = 4,
  kIoError = 5,
};

// Runs one invocation. `args` excludes the program name. Summaries go to
// `out`, diagnostics as "error[<category>]: <message>" to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace bhg::cli

#endif  // BHG_TOOLS_CLI_H_
