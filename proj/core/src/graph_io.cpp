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
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {
namespace {

bool skippable(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  int n_nodes = -1;
  std::vector<Edge> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (skippable(line)) continue;
    std::istringstream fields(line);
    if (n_nodes < 0) {
      std::string tag;
      if (!(fields >> tag >> n_nodes) || tag != "N" || n_nodes < 2) {
        throw FormatError(line_no, "expected header 'N <count>' with count >= 2");
      }
    } else {
      Edge e;
      if (!(fields >> e.first >> e.second)) throw FormatError(line_no, "expected 'x y'");
      std::string rest;
      if (fields >> rest) throw FormatError(line_no, "trailing text '" + rest + "'");
      if (e.first < 0 || e.first >= n_nodes || e.second < 0 || e.second >= n_nodes) {
        throw FormatError(line_no, "node label outside [0, " + std::to_string(n_nodes) + ")");
      }
      edges.push_back(e);
    }
  }
  if (n_nodes < 0) throw FormatError(line_no, "missing header 'N <count>'");
  try {
    return Graph::from_edges(n_nodes, edges);
  } catch (const std::invalid_argument& e) {
    throw FormatError(line_no, e.what());
  }
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open graph file " + path);
  return read_edge_list(in);
}

void write_edge_list(const Graph& graph, std::ostream& out) {
  out << "N " << graph.n_nodes() << '\n';
  for (const Edge& e : graph.edges()) out << e.first << ' ' << e.second << '\n';
}

void save_graph(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write graph file " + path);
  write_edge_list(graph, out);
}

void write_dot(const Graph& graph, std::ostream& out) {
  out << "graph G {\n";
  for (int x = 0; x < graph.n_nodes(); ++x) out << "  " << x << ";\n";
  for (const Edge& e : graph.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
}

void export_dot(const Graph& graph, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write DOT file " + path);
  write_dot(graph, out);
}

}  // namespace qwalk
