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

#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qwalk {

/// Undirected edge stored with first < second.
struct Edge {
  int first = 0;
  int second = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Immutable simple graph with the labeling used by the walk.
///
/// Node x has sorted neighbors G[x]; the particle color c < d_x selects the
/// edge (x, G[x][c]). The subnode S[x][i] is the color under which x appears
/// from its i-th neighbor y = G[x][i], i.e. the index of x in G[y], so that
/// G[G[x][i]][S[x][i]] == x. Offsets sD[x] = sum of degrees of nodes below x
/// place the color blocks of the packed basis.
class Graph {
 public:
  /// Builds from an edge list. Edges may be given in either orientation.
  /// Throws std::invalid_argument on out-of-range labels, self-loops,
  /// duplicate edges, isolated nodes, or fewer than two nodes.
  static Graph from_edges(int n_nodes, std::span<const Edge> edges);
  static Graph from_edges(int n_nodes, std::initializer_list<std::pair<int, int>> edges);

  int n_nodes() const { return n_nodes_; }
  int max_degree() const { return max_degree_; }
  int degree_sum() const { return degree_sum_; }
  int degree(int x) const { return static_cast<int>(adjacency_[x].size()); }
  int offset(int x) const { return offsets_[x]; }

  std::span<const int> neighbors(int x) const { return adjacency_[x]; }
  std::span<const int> subnodes(int x) const { return subnodes_[x]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& adjacency() const { return adjacency_; }
  const std::vector<std::vector<int>>& subnode_table() const { return subnodes_; }
  std::vector<int> degrees() const;
  const std::vector<int>& offsets() const { return offsets_; }

  /// Bit x set for every neighbor x of node `x`.
  std::uint64_t neighbor_mask(int x) const { return neighbor_masks_[x]; }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_nodes_ == b.n_nodes_ && a.edges_ == b.edges_;
  }

 private:
  Graph() = default;

  int n_nodes_ = 0;
  int max_degree_ = 0;
  int degree_sum_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adjacency_;
  std::vector<std::vector<int>> subnodes_;
  std::vector<int> offsets_;
  std::vector<std::uint64_t> neighbor_masks_;
};

enum class GraphFamily {
  kCycle,
  kPath,
  kLadder,
  kCircularLadder,
  kMoebiusLadder,
  kComplete,
  kBull,
  kKite,
  kRandomRegular,
  kErdosRenyi,
};

std::string_view to_string(GraphFamily family);
/// Throws std::invalid_argument for unknown names.
GraphFamily parse_graph_family(std::string_view name);

/// Parameters for `generate`. Which fields are read depends on the family:
///   cycle, path, complete, moebius_ladder: n
///   ladder, circular_ladder:                rungs
///   random_regular:                         degree, n, seed
///   erdos_renyi:                            n, edges, seed
///   bull, kite:                             none
struct GraphSpec {
  GraphFamily family = GraphFamily::kCycle;
  int n = 0;
  int rungs = 0;
  int degree = 0;
  int edges = 0;
  std::uint64_t seed = 0;
};

/// Generates a named family. Randomized families are deterministic in `seed`.
/// Throws std::invalid_argument for infeasible parameters.
Graph generate(const GraphSpec& spec);

Graph cycle_graph(int n);
Graph path_graph(int n);
/// Two paths 0..k-1 and k..2k-1 joined by rungs (i, i+k).
Graph ladder_graph(int rungs);
/// Ladder with both rails closed into cycles; rungs = 4 gives the cube.
Graph circular_ladder_graph(int rungs);
/// Cycle 0..n-1 with chords (i, i + n/2): a ladder closed with one twist.
Graph moebius_ladder_graph(int n);
Graph complete_graph(int n);
Graph bull_graph();
/// K5 on nodes 0..4 and K3 on nodes 5..7 joined by the bridge (4, 5).
Graph kite_graph();
/// Uniform pairing model, rejected and retried until the result is simple.
Graph random_regular_graph(int degree, int n, std::uint64_t seed);
/// Uniform choice of `m` distinct edges, retried until the graph is connected.
Graph erdos_renyi_graph(int n, int m, std::uint64_t seed);

bool is_connected(const Graph& graph);

// Edge-list text format: first non-comment line "N <count>", then one
// "x y" pair per line. Blank lines and lines starting with '#' are skipped.
Graph read_edge_list(std::istream& in);
Graph load_graph(const std::string& path);
void write_edge_list(const Graph& graph, std::ostream& out);
void save_graph(const Graph& graph, const std::string& path);
void write_dot(const Graph& graph, std::ostream& out);
void export_dot(const Graph& graph, const std::string& path);

}  // namespace qwalk
