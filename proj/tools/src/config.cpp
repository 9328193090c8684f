// Copyright 2026 The qwalk Authors
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

#include <fstream>
#include <set>
#include <string>

#include "qwalk/cli/cli.hpp"

namespace qwalk::cli {
namespace {

using nlohmann::json;

void reject_unknown(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + " must be an object");
  for (const auto& item : j.items()) {
    if (!allowed.count(item.key())) throw ConfigError("unknown key '" + item.key() + "' in " + where);
  }
}

template <class T>
void read(const json& j, const char* key, T& target, const std::string& where) {
  if (!j.contains(key)) return;
  try {
    target = j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("bad value for '" + std::string(key) + "' in " + where);
  }
}

GraphSource graph_from_json(const json& j) {
  reject_unknown(j, {"family", "file", "n", "rungs", "degree", "edges"}, "graph");
  GraphSource g;
  if (j.contains("file")) {
    if (j.contains("family")) throw ConfigError("graph takes either 'family' or 'file', not both");
    std::string file;
    read(j, "file", file, "graph");
    g.file = file;
    return g;
  }
  std::string family;
  read(j, "family", family, "graph");
  if (family.empty()) throw ConfigError("graph needs 'family' or 'file'");
  try {
    g.spec.family = parse_graph_family(family);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  read(j, "n", g.spec.n, "graph");
  read(j, "rungs", g.spec.rungs, "graph");
  read(j, "degree", g.spec.degree, "graph");
  read(j, "edges", g.spec.edges, "graph");
  return g;
}

}  // namespace

ExperimentConfig config_from_json(const json& j) {
  reject_unknown(j, {"graph", "coin", "cz_mode", "initial", "steps", "t0", "t1", "seed", "out", "guards", "spectrum"},
                 "config");
  ExperimentConfig c;
  if (j.contains("graph")) c.graph = graph_from_json(j.at("graph"));
  try {
    if (j.contains("coin")) c.coin = parse_coin(j.at("coin").get<std::string>());
    if (j.contains("cz_mode")) c.cz_mode = parse_cz_mode(j.at("cz_mode").get<std::string>());
  } catch (const std::exception& e) {
    throw ConfigError(e.what());
  }
  if (j.contains("initial")) {
    c.initial.clear();
    const json& kets = j.at("initial");
    if (!kets.is_array()) throw ConfigError("'initial' must be a list of [x, c, s] triples");
    for (const json& k : kets) {
      if (!k.is_array() || k.size() != 3) throw ConfigError("'initial' must be a list of [x, c, s] triples");
      try {
        c.initial.push_back({k[0].get<int>(), k[1].get<int>(), k[2].get<std::uint64_t>()});
      } catch (const json::exception&) {
        throw ConfigError("'initial' entries must be nonnegative integers");
      }
    }
  }
  read(j, "steps", c.steps, "config");
  if (j.contains("t0") && !j.at("t0").is_null()) {
    int t0 = 0;
    read(j, "t0", t0, "config");
    c.t0 = t0;
  }
  if (j.contains("t1") && !j.at("t1").is_null()) {
    int t1 = 0;
    read(j, "t1", t1, "config");
    c.t1 = t1;
  }
  read(j, "seed", c.seed, "config");
  read(j, "out", c.out, "config");
  if (j.contains("guards")) {
    const json& g = j.at("guards");
    reject_unknown(g, {"max_state_nodes", "max_spin_density_nodes", "max_operator_dim"}, "guards");
    read(g, "max_state_nodes", c.guards.max_state_nodes, "guards");
    read(g, "max_spin_density_nodes", c.guards.max_spin_density_nodes, "guards");
    read(g, "max_operator_dim", c.guards.max_operator_dim, "guards");
  }
  if (j.contains("spectrum")) {
    const json& s = j.at("spectrum");
    reject_unknown(s,
                   {"eigenvectors", "filter_degeneracy", "histogram_bins", "spacing_bins", "spacing_max", "u_network",
                    "dump_operator"},
                   "spectrum");
    read(s, "eigenvectors", c.spectrum.eigenvectors, "spectrum");
    read(s, "filter_degeneracy", c.spectrum.filter_degeneracy, "spectrum");
    read(s, "histogram_bins", c.spectrum.histogram_bins, "spectrum");
    read(s, "spacing_bins", c.spectrum.spacing_bins, "spectrum");
    read(s, "spacing_max", c.spectrum.spacing_max, "spectrum");
    read(s, "u_network", c.spectrum.u_network, "spectrum");
    read(s, "dump_operator", c.spectrum.dump_operator, "spectrum");
  }
  return c;
}

nlohmann::ordered_json config_to_json(const ExperimentConfig& c) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json g;
  if (c.graph.file) {
    g["file"] = *c.graph.file;
  } else {
    g["family"] = std::string(to_string(c.graph.spec.family));
    g["n"] = c.graph.spec.n;
    g["rungs"] = c.graph.spec.rungs;
    g["degree"] = c.graph.spec.degree;
    g["edges"] = c.graph.spec.edges;
  }
  j["graph"] = g;
  j["coin"] = std::string(to_string(c.coin));
  j["cz_mode"] = std::string(to_string(c.cz_mode));
  nlohmann::ordered_json kets = nlohmann::ordered_json::array();
  for (const BasisKet& k : c.initial) kets.push_back({k.node, k.color, k.spins});
  j["initial"] = kets;
  j["steps"] = c.steps;
  j["t0"] = c.window_start();
  j["t1"] = c.window_end();
  j["seed"] = c.seed;
  j["out"] = c.out;
  j["guards"] = {{"max_state_nodes", c.guards.max_state_nodes},
                 {"max_spin_density_nodes", c.guards.max_spin_density_nodes},
                 {"max_operator_dim", c.guards.max_operator_dim}};
  j["spectrum"] = {{"eigenvectors", c.spectrum.eigenvectors},
                   {"filter_degeneracy", c.spectrum.filter_degeneracy},
                   {"histogram_bins", c.spectrum.histogram_bins},
                   {"spacing_bins", c.spectrum.spacing_bins},
                   {"spacing_max", c.spectrum.spacing_max},
                   {"u_network", c.spectrum.u_network},
                   {"dump_operator", c.spectrum.dump_operator}};
  return j;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path + ": " + e.what());
  }
  return config_from_json(j);
}

void validate(const ExperimentConfig& c) {
  if (c.steps < 0) throw ConfigError("steps must be >= 0");
  const int t0 = c.window_start();
  const int t1 = c.window_end();
  if (t0 < 0 || t1 > c.steps || t0 > t1) {
    throw ConfigError("stationary window [" + std::to_string(t0) + ", " + std::to_string(t1) +
                      "] must lie inside [0, steps]");
  }
  if (c.initial.empty()) throw ConfigError("'initial' needs at least one ket");
  if (c.out.empty()) throw ConfigError("output directory must not be empty");
  if (c.spectrum.histogram_bins < 1 || c.spectrum.spacing_bins < 1 || !(c.spectrum.spacing_max > 0.0)) {
    throw ConfigError("histogram bins must be >= 1 and spacing_max > 0");
  }
  if (c.guards.max_state_nodes < 2 || c.guards.max_spin_density_nodes < 2) throw ConfigError("guards must be >= 2");
}

Graph resolve_graph(const ExperimentConfig& c) {
  if (c.graph.file) {
    try {
      return load_graph(*c.graph.file);
    } catch (const FormatError& e) {
      throw ConfigError(*c.graph.file + ": " + e.what());
    } catch (const std::runtime_error& e) {
      throw ConfigError(e.what());
    }
  }
  GraphSpec spec = c.graph.spec;
  spec.seed = c.seed;
  try {
    return generate(spec);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(to_string(c.graph.spec.family)) + ": " + e.what());
  }
}

}  // namespace qwalk::cli
