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

#ifndef QKIN_CONFIG_HPP
#define QKIN_CONFIG_HPP

#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qkin/scaling.hpp"
#include "qkin/solvers.hpp"

namespace qkin {

/// Config parse/validation failure; the message names the offending field.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& field, const std::string& what)
      : std::runtime_error(field + ": " + what), field_(field) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class Command {
  kEvolve,
  kEquivalence,
  kInvert,
  kMeanfield,
  kChaos,
  kCumulantTable,
  kSelftest,
};

std::string command_name(Command c);
Command command_from_name(const std::string& name);

struct EquivalenceParams {
  int s = 2;
  double t = 0.3;
  std::vector<int> n_max_list = {0, 1, 2, 3, 4};
};

struct InvertParams {
  double t = 0.3;
};

struct ChaosParams {
  int s = 2;
};

struct CumulantTableParams {
  std::vector<std::pair<int, int>> orders;  // (s, n); defaults to s+n <= 4, d-independent
  std::vector<double> times = {0.1, 0.5, 1.0};
};

/// One self-describing config drives a run: model, initial datum, series and
/// contraction policy, optional sweep, command and output destination.
struct RunConfig {
  int schema_version = 1;
  Command command = Command::kSelftest;
  int workers = 1;
  std::string output_path;
  std::string format = "csv";  // csv | json

  int dim = 2;
  double hbar = 1.0;
  double coupling = 0.5;
  Matrix one_body;
  Matrix pair_potential;
  Matrix initial;
  std::optional<Matrix> observable;

  SeriesConfig series;
  ContractionConfig contraction;
  std::optional<SweepSpec> sweep;

  EquivalenceParams equivalence;
  InvertParams invert;
  ChaosParams chaos;
  CumulantTableParams cumulant_table;

  ModelSpec make_model() const;
  ManyBodyOperator make_initial() const;
  ManyBodyOperator make_observable() const;  // config observable or one_body
};

/// Parses and validates; throws ConfigError naming the offending field.
RunConfig parse_run_config(const nlohmann::json& j);
RunConfig load_run_config(const std::string& path);

/// The fully resolved config (defaults filled in), used as report meta.
nlohmann::json resolved_config_json(const RunConfig& cfg);

/// Matrix <-> row-major [re, im] pair list
Matrix matrix_from_pairs(const nlohmann::json& j, int rows, int cols, const std::string& field);
nlohmann::json matrix_to_pairs(const Matrix& m);

}  // namespace qkin

#endif  // QKIN_CONFIG_HPP
