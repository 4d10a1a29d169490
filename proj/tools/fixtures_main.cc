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

#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "bhg/error.h"
#include "fixtures.h"

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the sample inputs under fixtures/", "bhg-fixtures"};
  std::string dir = "fixtures";
  std::uint64_t seed = 20260101;
  app.add_option("--out-dir", dir, "Output directory");
  app.add_option("--seed", seed, "Noise seed for the calibration data");
  CLI11_PARSE(app, argc, argv);
  try {
    bhg::fixtures::write_fixtures(dir, seed);
  } catch (const bhg::Error& e) {
    std::cerr << "error[" << bhg::error_code_name(e.code()) << "]: " << e.what() << "\n";
    return 5;
  }
  std::cout << "fixtures written to " << dir << "\n";
  return 0;
}
