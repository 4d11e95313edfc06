// Copyright 2026 The quantumkinetics authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QKIN_REPORT_HPP
#define QKIN_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace qkin {

/// One report cell: double, integer or string. Doubles print with 17
/// significant digits in CSV (round-trip exact).
struct Cell {
  enum class Kind { kDouble, kInt, kString } kind = Kind::kString;
  double num = 0.0;
  long long integer = 0;
  std::string text;

  static Cell number(double v);
  static Cell count(long long v);
  static Cell str(std::string v);
  nlohmann::json to_json() const;
  std::string to_csv() const;
};

struct Report {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  void add_row(std::vector<Cell> cells);
};

std::string format_double_17(double v);

/// CSV with a header row; every numeric cell carries 17 significant digits.
std::string report_to_csv(const Report& report);

/// {meta, rows} with the full resolved config under meta.
std::string report_to_json(const Report& report, const nlohmann::json& meta);

}  // namespace qkin

#endif  // QKIN_REPORT_HPP
