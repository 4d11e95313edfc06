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

#include "qkin/config.hpp"

#include <fstream>

namespace qkin {

using nlohmann::json;

std::string command_name(Command c) {
  switch (c) {
    case Command::kEvolve: return "evolve";
    case Command::kEquivalence: return "equivalence";
    case Command::kInvert: return "invert";
    case Command::kMeanfield: return "meanfield";
    case Command::kChaos: return "chaos";
    case Command::kCumulantTable: return "cumulant-table";
    case Command::kSelftest: return "selftest";
  }
  throw std::logic_error("command_name: unreachable");
}

Command command_from_name(const std::string& name) {
  if (name == "evolve") return Command::kEvolve;
  if (name == "equivalence") return Command::kEquivalence;
  if (name == "invert") return Command::kInvert;
  if (name == "meanfield") return Command::kMeanfield;
  if (name == "chaos") return Command::kChaos;
  if (name == "cumulant-table") return Command::kCumulantTable;
  if (name == "selftest") return Command::kSelftest;
  throw ConfigError("command", "unrecognized command '" + name + "'");
}

Matrix matrix_from_pairs(const json& j, int rows, int cols, const std::string& field) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows * cols)
    throw ConfigError(field, "expected a row-major list of " + std::to_string(rows * cols) +
                                 " [re, im] pairs");
  Matrix out(rows, cols);
  for (int i = 0; i < rows * cols; ++i) {
    const json& cell = j[i];
    if (!cell.is_array() || cell.size() != 2 || !cell[0].is_number() || !cell[1].is_number())
      throw ConfigError(field, "entry " + std::to_string(i) + " is not an [re, im] pair");
    out(i / cols, i % cols) = Complex(cell[0].get<double>(), cell[1].get<double>());
  }
  return out;
}

json matrix_to_pairs(const Matrix& m) {
  json out = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      out.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
  return out;
}

namespace {

const json* find(const json& j, const std::string& key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

template <typename T>
T get_or(const json& j, const std::string& key, const std::string& path, T fallback) {
  const json* v = find(j, key);
  if (v == nullptr) return fallback;
  try {
    return v->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "has the wrong type");
  }
}

template <typename T>
T get_required(const json& j, const std::string& key, const std::string& path) {
  const json* v = find(j, key);
  if (v == nullptr) throw ConfigError(path, "is required");
  try {
    return v->get<T>();
  } catch (const json::exception&) {
    throw ConfigError(path, "has the wrong type");
  }
}

}  // namespace

ModelSpec RunConfig::make_model() const {
  try {
    return ModelSpec(dim, hbar, one_body, pair_potential, coupling);
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    if (what.find("one_body") != std::string::npos) throw ConfigError("model.one_body", what);
    if (what.find("pair_potential") != std::string::npos) throw ConfigError("model.pair_potential", what);
    throw ConfigError("model", what);
  }
}

ManyBodyOperator RunConfig::make_initial() const {
  ManyBodyOperator f(1, dim, initial);
  if (!f.is_hermitian()) throw ConfigError("initial", "matrix is not hermitian within 1e-12");
  return f;
}

ManyBodyOperator RunConfig::make_observable() const {
  Matrix a = observable.has_value() ? *observable : one_body;
  ManyBodyOperator out(1, dim, std::move(a));
  if (!out.is_hermitian()) throw ConfigError("observable", "matrix is not hermitian within 1e-12");
  return out;
}

RunConfig parse_run_config(const json& j) {
  RunConfig cfg;
  if (!j.is_object()) throw ConfigError("(root)", "config must be a JSON object");

  cfg.schema_version = get_or<int>(j, "schema_version", "schema_version", -1);
  if (cfg.schema_version != 1) throw ConfigError("schema_version", "must be present and equal to 1");

  cfg.command = command_from_name(get_required<std::string>(j, "command", "command"));
  cfg.workers = get_or<int>(j, "workers", "workers", 1);
  if (cfg.workers < 1) throw ConfigError("workers", "must be >= 1");
  cfg.output_path = get_or<std::string>(j, "output_path", "output_path", "");
  if (cfg.output_path.empty()) throw ConfigError("output_path", "is required");
  cfg.format = get_or<std::string>(j, "format", "format", "csv");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("format", "must be 'csv' or 'json'");

  const json* model = find(j, "model");
  if (model == nullptr || !model->is_object()) throw ConfigError("model", "is required");
  cfg.dim = get_or<int>(*model, "dim", "model.dim", 2);
  if (cfg.dim < 2) throw ConfigError("model.dim", "must be >= 2");
  cfg.hbar = get_or<double>(*model, "hbar", "model.hbar", 1.0);
  if (cfg.hbar <= 0.0) throw ConfigError("model.hbar", "must be positive");
  cfg.coupling = get_or<double>(*model, "coupling", "model.coupling", 1.0);
  if (cfg.coupling < 0.0) throw ConfigError("model.coupling", "must be >= 0");
  const json* ob = find(*model, "one_body");
  if (ob == nullptr) throw ConfigError("model.one_body", "is required");
  cfg.one_body = matrix_from_pairs(*ob, cfg.dim, cfg.dim, "model.one_body");
  const json* pp = find(*model, "pair_potential");
  if (pp == nullptr) throw ConfigError("model.pair_potential", "is required");
  cfg.pair_potential = matrix_from_pairs(*pp, cfg.dim * cfg.dim, cfg.dim * cfg.dim, "model.pair_potential");

  const json* init = find(j, "initial");
  if (init == nullptr) throw ConfigError("initial", "is required");
  cfg.initial = matrix_from_pairs(*init, cfg.dim, cfg.dim, "initial");

  if (const json* obs = find(j, "observable"))
    cfg.observable = matrix_from_pairs(*obs, cfg.dim, cfg.dim, "observable");

  if (const json* series = find(j, "series")) {
    if (!series->is_object()) throw ConfigError("series", "must be an object");
    cfg.series.n_max = get_or<int>(*series, "n_max", "series.n_max", cfg.series.n_max);
    cfg.series.dt = get_or<double>(*series, "dt", "series.dt", cfg.series.dt);
    cfg.series.duhamel_nodes =
        get_or<int>(*series, "duhamel_nodes", "series.duhamel_nodes", cfg.series.duhamel_nodes);
    cfg.series.times = get_or<std::vector<double>>(*series, "times", "series.times", {});
    cfg.series.norm_guard = get_or<bool>(*series, "norm_guard", "series.norm_guard", true);
    if (const json* tol = find(*series, "tolerances")) {
      if (!tol->is_object()) throw ConfigError("series.tolerances", "must be an object");
      for (auto it = tol->begin(); it != tol->end(); ++it) {
        if (!it.value().is_number())
          throw ConfigError("series.tolerances." + it.key(), "must be a number");
        cfg.series.tolerances[it.key()] = it.value().get<double>();
      }
    }
    try {
      cfg.series.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("series", e.what());
    }
  }

  if (const json* con = find(j, "contraction")) {
    if (!con->is_object()) throw ConfigError("contraction", "must be an object");
    cfg.contraction.max_iters =
        get_or<int>(*con, "max_iters", "contraction.max_iters", cfg.contraction.max_iters);
    cfg.contraction.fixed_point_tol = get_or<double>(*con, "fixed_point_tol",
                                                     "contraction.fixed_point_tol",
                                                     cfg.contraction.fixed_point_tol);
    try {
      cfg.contraction.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("contraction", e.what());
    }
  }

  if (const json* sw = find(j, "sweep")) {
    if (!sw->is_object()) throw ConfigError("sweep", "must be an object");
    SweepSpec sweep;
    sweep.epsilons = get_required<std::vector<double>>(*sw, "epsilons", "sweep.epsilons");
    sweep.time = get_or<double>(*sw, "time", "sweep.time", sweep.time);
    sweep.vlasov_order = get_or<int>(*sw, "vlasov_order", "sweep.vlasov_order", sweep.vlasov_order);
    sweep.quadrature_nodes =
        get_or<int>(*sw, "quadrature_nodes", "sweep.quadrature_nodes", sweep.quadrature_nodes);
    try {
      sweep.validate();
    } catch (const std::invalid_argument& e) {
      throw ConfigError("sweep", e.what());
    }
    cfg.sweep = sweep;
  }

  if (const json* eq = find(j, "equivalence")) {
    if (!eq->is_object()) throw ConfigError("equivalence", "must be an object");
    cfg.equivalence.s = get_or<int>(*eq, "s", "equivalence.s", cfg.equivalence.s);
    if (cfg.equivalence.s < 1) throw ConfigError("equivalence.s", "must be >= 1");
    cfg.equivalence.t = get_or<double>(*eq, "t", "equivalence.t", cfg.equivalence.t);
    cfg.equivalence.n_max_list = get_or<std::vector<int>>(*eq, "n_max_list", "equivalence.n_max_list",
                                                          cfg.equivalence.n_max_list);
    if (cfg.equivalence.n_max_list.empty()) throw ConfigError("equivalence.n_max_list", "must be nonempty");
    for (int v : cfg.equivalence.n_max_list)
      if (v < 0) throw ConfigError("equivalence.n_max_list", "entries must be >= 0");
  }

  if (const json* iv = find(j, "invert")) {
    if (!iv->is_object()) throw ConfigError("invert", "must be an object");
    cfg.invert.t = get_or<double>(*iv, "t", "invert.t", cfg.invert.t);
  }

  if (const json* ch = find(j, "chaos")) {
    if (!ch->is_object()) throw ConfigError("chaos", "must be an object");
    cfg.chaos.s = get_or<int>(*ch, "s", "chaos.s", cfg.chaos.s);
    if (cfg.chaos.s < 1) throw ConfigError("chaos.s", "must be >= 1");
  }

  if (const json* ct = find(j, "cumulant_table")) {
    if (!ct->is_object()) throw ConfigError("cumulant_table", "must be an object");
    if (const json* orders = find(*ct, "orders")) {
      cfg.cumulant_table.orders.clear();
      if (!orders->is_array()) throw ConfigError("cumulant_table.orders", "must be a list of [s, n] pairs");
      for (const auto& p : *orders) {
        if (!p.is_array() || p.size() != 2)
          throw ConfigError("cumulant_table.orders", "must be a list of [s, n] pairs");
        cfg.cumulant_table.orders.emplace_back(p[0].get<int>(), p[1].get<int>());
      }
    }
    cfg.cumulant_table.times = get_or<std::vector<double>>(*ct, "times", "cumulant_table.times",
                                                           cfg.cumulant_table.times);
    if (cfg.cumulant_table.times.empty()) throw ConfigError("cumulant_table.times", "must be nonempty");
  }
  if (cfg.cumulant_table.orders.empty()) {
    for (int s = 1; s <= 3; ++s)
      for (int n = 0; s + n <= 4; ++n) cfg.cumulant_table.orders.emplace_back(s, n);
  }

  if ((cfg.command == Command::kMeanfield || cfg.command == Command::kChaos) && !cfg.sweep.has_value())
    throw ConfigError("sweep", "is required for meanfield and chaos commands");
  if (cfg.command == Command::kEvolve && cfg.series.times.empty())
    throw ConfigError("series.times", "is required for the evolve command");

  // surface shape/hermiticity problems now, with field names
  cfg.make_model();
  cfg.make_initial();
  cfg.make_observable();
  return cfg;
}

RunConfig load_run_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("(file)", "cannot open config file '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("(file)", std::string("JSON parse error: ") + e.what());
  }
  return parse_run_config(j);
}

nlohmann::json resolved_config_json(const RunConfig& cfg) {
  json j;
  j["schema_version"] = cfg.schema_version;
  j["command"] = command_name(cfg.command);
  j["workers"] = cfg.workers;
  j["output_path"] = cfg.output_path;
  j["format"] = cfg.format;
  j["model"] = {{"dim", cfg.dim},
                {"hbar", cfg.hbar},
                {"coupling", cfg.coupling},
                {"one_body", matrix_to_pairs(cfg.one_body)},
                {"pair_potential", matrix_to_pairs(cfg.pair_potential)}};
  j["initial"] = matrix_to_pairs(cfg.initial);
  if (cfg.observable.has_value()) j["observable"] = matrix_to_pairs(*cfg.observable);
  j["series"] = {{"n_max", cfg.series.n_max},
                 {"dt", cfg.series.dt},
                 {"duhamel_nodes", cfg.series.duhamel_nodes},
                 {"times", cfg.series.times},
                 {"norm_guard", cfg.series.norm_guard},
                 {"tolerances", cfg.series.tolerances}};
  j["contraction"] = {{"max_iters", cfg.contraction.max_iters},
                      {"fixed_point_tol", cfg.contraction.fixed_point_tol},
                      {"threshold", cfg.contraction.threshold}};
  if (cfg.sweep.has_value())
    j["sweep"] = {{"epsilons", cfg.sweep->epsilons},
                  {"time", cfg.sweep->time},
                  {"vlasov_order", cfg.sweep->vlasov_order},
                  {"quadrature_nodes", cfg.sweep->quadrature_nodes}};
  j["equivalence"] = {{"s", cfg.equivalence.s},
                      {"t", cfg.equivalence.t},
                      {"n_max_list", cfg.equivalence.n_max_list}};
  j["invert"] = {{"t", cfg.invert.t}};
  j["chaos"] = {{"s", cfg.chaos.s}};
  {
    json orders = json::array();
    for (const auto& [s, n] : cfg.cumulant_table.orders) orders.push_back(json::array({s, n}));
    j["cumulant_table"] = {{"orders", orders}, {"times", cfg.cumulant_table.times}};
  }
  return j;
}

}  // namespace qkin
