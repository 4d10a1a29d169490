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

#ifndef BHG_IO_H_
#define BHG_IO_H_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bhg::io {

// Shortest decimal text that parses back to exactly `v`.
std::string format_number(double v);

// Throws Error(kIo) with the path in the message.
std::string read_file(const std::filesystem::path& path);

// Writes to a sibling temporary file and renames it over `path`, so a
// failed write never leaves a partial output behind. Throws Error(kIo).
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  // Column index by name; throws Error(kIo) when missing.
  std::size_t column(std::string_view name) const;
};

// Numeric CSV with one header line. Blank lines are skipped. Throws
// Error(kIo) on ragged rows or unparsable cells.
CsvTable parse_csv(std::string_view text);
std::string format_csv(const CsvTable& table);

}  // namespace bhg::io

#endif  // BHG_IO_H_
