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

#include "qkin/report.hpp"

#include <cstdio>
#include <sstream>
#include <stdexcept>

namespace qkin {

Cell Cell::number(double v) {
  Cell c;
  c.kind = Kind::kDouble;
  c.num = v;
  return c;
}

Cell Cell::count(long long v) {
  Cell c;
  c.kind = Kind::kInt;
  c.integer = v;
  return c;
}

Cell Cell::str(std::string v) {
  Cell c;
  c.kind = Kind::kString;
  c.text = std::move(v);
  return c;
}

nlohmann::json Cell::to_json() const {
  switch (kind) {
    case Kind::kDouble: return num;
    case Kind::kInt: return integer;
    case Kind::kString: return text;
  }
  throw std::logic_error("Cell::to_json: unreachable");
}

std::string format_double_17(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string Cell::to_csv() const {
  switch (kind) {
    case Kind::kDouble: return format_double_17(num);
    case Kind::kInt: return std::to_string(integer);
    case Kind::kString: {
      if (text.find_first_of(",\"\n") == std::string::npos) return text;
      std::string quoted = "\"";
      for (char ch : text) {
        if (ch == '"') quoted += '"';
        quoted += ch;
      }
      quoted += '"';
      return quoted;
    }
  }
  throw std::logic_error("Cell::to_csv: unreachable");
}

void Report::add_row(std::vector<Cell> cells) {
  if (cells.size() != columns.size())
    throw std::invalid_argument("Report::add_row: cell count does not match the header");
  rows.push_back(std::move(cells));
}

std::string report_to_csv(const Report& report) {
  std::ostringstream os;
  for (std::size_t i = 0; i < report.columns.size(); ++i) {
    if (i) os << ',';
    os << report.columns[i];
  }
  os << '\n';
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      os << row[i].to_csv();
    }
    os << '\n';
  }
  return os.str();
}

std::string report_to_json(const Report& report, const nlohmann::json& meta) {
  nlohmann::json out;
  out["meta"] = meta;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : report.rows) {
    nlohmann::json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[report.columns[i]] = row[i].to_json();
    rows.push_back(std::move(obj));
  }
  out["rows"] = std::move(rows);
  return out.dump(2) + "\n";
}

}  // namespace qkin
