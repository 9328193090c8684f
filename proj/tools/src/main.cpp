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

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#ifdef QWALK_CLI11_SINGLE_HEADER
#include <CLI11.hpp>
#else
#include <CLI/CLI.hpp>
#endif

#include "qwalk/cli/cli.hpp"

namespace {

using qwalk::cli::ConfigError;
using qwalk::cli::ExperimentConfig;

struct Overrides {
  std::string config;
  std::optional<std::string> out;
  std::optional<std::string> coin;
  std::optional<std::string> cz_mode;
  std::optional<int> steps;
  std::optional<int> t0;
  std::optional<int> t1;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> family;
  std::optional<std::string> graph_file;
  std::optional<int> n;
  std::optional<int> rungs;
  std::optional<int> degree;
  std::optional<int> edges;
  std::vector<std::string> initial;
  bool eigenvalues_only = false;
  bool no_filter = false;
  bool u_network = false;
  bool dump_operator = false;
};

void add_common(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config, "JSON experiment config; flags override its fields");
  cmd->add_option("--out", o.out, "Output directory");
  cmd->add_option("--coin", o.coin, "grover | fourier");
  cmd->add_option("--cz-mode", o.cz_mode, "edge_list | incident");
  cmd->add_option("--steps", o.steps, "Number of walk steps T");
  cmd->add_option("--t0", o.t0, "Stationary window start (default T/2)");
  cmd->add_option("--t1", o.t1, "Stationary window end (default T)");
  cmd->add_option("--seed", o.seed, "Seed for randomized graph families");
  cmd->add_option("--graph", o.family,
                  "Graph family: cycle, path, ladder, circular_ladder, moebius_ladder, complete, bull, kite, "
                  "random_regular, erdos_renyi");
  cmd->add_option("--graph-file", o.graph_file, "Edge-list file ('N <count>' header, one 'x y' per line)");
  cmd->add_option("--n", o.n, "Node count");
  cmd->add_option("--rungs", o.rungs, "Ladder rungs");
  cmd->add_option("--degree", o.degree, "Degree of random_regular");
  cmd->add_option("--edges", o.edges, "Edge count of erdos_renyi");
  cmd->add_option("--initial", o.initial, "Initial ket x,c,s (repeatable; equal superposition)");
}

qwalk::BasisKet parse_ket(const std::string& text) {
  std::istringstream in(text);
  qwalk::BasisKet k;
  char a = 0;
  char b = 0;
  if (!(in >> k.node >> a >> k.color >> b >> k.spins) || a != ',' || b != ',' || !in.eof()) {
    throw ConfigError("bad ket '" + text + "', expected x,c,s");
  }
  return k;
}

ExperimentConfig resolve(const Overrides& o) {
  ExperimentConfig c = o.config.empty() ? ExperimentConfig{} : qwalk::cli::load_config(o.config);
  if (o.family && o.graph_file) throw ConfigError("--graph and --graph-file are exclusive");
  if (o.graph_file) c.graph.file = *o.graph_file;
  if (o.family) {
    c.graph.file.reset();
    c.graph.spec = {};
    try {
      c.graph.spec.family = qwalk::parse_graph_family(*o.family);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
  }
  if (o.n) c.graph.spec.n = *o.n;
  if (o.rungs) c.graph.spec.rungs = *o.rungs;
  if (o.degree) c.graph.spec.degree = *o.degree;
  if (o.edges) c.graph.spec.edges = *o.edges;
  try {
    if (o.coin) c.coin = qwalk::parse_coin(*o.coin);
    if (o.cz_mode) c.cz_mode = qwalk::parse_cz_mode(*o.cz_mode);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  if (o.steps) c.steps = *o.steps;
  if (o.t0) c.t0 = *o.t0;
  if (o.t1) c.t1 = *o.t1;
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.out = *o.out;
  if (!o.initial.empty()) {
    c.initial.clear();
    for (const std::string& k : o.initial) c.initial.push_back(parse_ket(k));
  }
  if (o.eigenvalues_only) c.spectrum.eigenvectors = false;
  if (o.no_filter) c.spectrum.filter_degeneracy = false;
  if (o.u_network) c.spectrum.u_network = true;
  if (o.dump_operator) c.spectrum.dump_operator = true;
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interacting quantum walk on spin graphs"};
  app.require_subcommand(1);
  Overrides o;
  CLI::App* graph = app.add_subcommand("graph", "Generate or load a graph; write edge list and DOT");
  CLI::App* evolve = app.add_subcommand("evolve", "Time evolution: trajectory CSV and summary JSON");
  CLI::App* spectrum = app.add_subcommand("spectrum", "Exact diagonalization of U and spectral statistics");
  for (CLI::App* cmd : {graph, evolve, spectrum}) add_common(cmd, o);
  spectrum->add_flag("--eigenvalues-only", o.eigenvalues_only, "Skip eigenvectors, entropies and thermalization");
  spectrum->add_flag("--no-filter", o.no_filter, "Keep degenerate levels in the spacing statistics");
  spectrum->add_flag("--u-network", o.u_network, "Write the U-network DOT file");
  spectrum->add_flag("--dump-operator", o.dump_operator, "Write U as a binary dump with JSON metadata");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? qwalk::cli::kExitOk : qwalk::cli::kExitConfig;
  }

  ExperimentConfig config;
  try {
    config = resolve(o);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return qwalk::cli::kExitConfig;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  return qwalk::cli::dispatch(command, config, std::cout, std::cerr);
}
