// Copyright 2026 The rcsbound Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace rcs {

/// Shortest representation that parses back to the same double ("inf",
/// "-inf" and "nan" for non-finite values).
std::string format_double(double value);

/// Throws FormatError when `text` is not a complete number.
double parse_double(std::string_view text);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  /// Column index by name, or -1.
  int column(std::string_view name) const;
};

/// Comma-separated, no quoting. Blank lines are skipped; every row must have
/// as many fields as the header.
CsvTable read_csv(std::istream& in);

}  // namespace rcs
