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

#include "qwalk/graph.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <stdexcept>

namespace qwalk {
namespace {

constexpr int kMaxAttempts = 100000;

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Graph Graph::from_edges(int n_nodes, std::span<const Edge> edges) {
  require(n_nodes >= 2, "graph needs at least 2 nodes, got " + std::to_string(n_nodes));
  // Spin configurations are packed into a 64-bit word.
  require(n_nodes <= 63, "graph has too many nodes for the spin register: " + std::to_string(n_nodes));

  Graph g;
  g.n_nodes_ = n_nodes;
  g.edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    require(e.first >= 0 && e.first < n_nodes && e.second >= 0 && e.second < n_nodes,
            "edge (" + std::to_string(e.first) + ", " + std::to_string(e.second) +
                ") has a node label outside [0, " + std::to_string(n_nodes) + ")");
    require(e.first != e.second, "self-loop at node " + std::to_string(e.first));
    g.edges_.push_back({std::min(e.first, e.second), std::max(e.first, e.second)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  require(dup == g.edges_.end(), dup == g.edges_.end()
                                     ? std::string{}
                                     : "duplicate edge (" + std::to_string(dup->first) + ", " +
                                           std::to_string(dup->second) + ")");

  g.adjacency_.assign(n_nodes, {});
  for (const Edge& e : g.edges_) {
    g.adjacency_[e.first].push_back(e.second);
    g.adjacency_[e.second].push_back(e.first);
  }
  for (int x = 0; x < n_nodes; ++x) {
    auto& nb = g.adjacency_[x];
    require(!nb.empty(), "node " + std::to_string(x) + " is isolated");
    std::sort(nb.begin(), nb.end());
  }

  g.subnodes_.assign(n_nodes, {});
  g.offsets_.assign(n_nodes, 0);
  g.neighbor_masks_.assign(n_nodes, 0);
  int running = 0;
  for (int x = 0; x < n_nodes; ++x) {
    const auto& nb = g.adjacency_[x];
    g.offsets_[x] = running;
    running += static_cast<int>(nb.size());
    g.max_degree_ = std::max(g.max_degree_, static_cast<int>(nb.size()));
    for (int y : nb) {
      const auto& back = g.adjacency_[y];
      auto it = std::lower_bound(back.begin(), back.end(), x);
      g.subnodes_[x].push_back(static_cast<int>(it - back.begin()));
      g.neighbor_masks_[x] |= std::uint64_t{1} << y;
    }
  }
  g.degree_sum_ = running;
  return g;
}

Graph Graph::from_edges(int n_nodes, std::initializer_list<std::pair<int, int>> edges) {
  std::vector<Edge> list;
  list.reserve(edges.size());
  for (auto [a, b] : edges) list.push_back({a, b});
  return from_edges(n_nodes, list);
}

std::vector<int> Graph::degrees() const {
  std::vector<int> d(n_nodes_);
  for (int x = 0; x < n_nodes_; ++x) d[x] = degree(x);
  return d;
}

namespace {

constexpr std::array<std::pair<GraphFamily, std::string_view>, 10> kFamilyNames{{
    {GraphFamily::kCycle, "cycle"},
    {GraphFamily::kPath, "path"},
    {GraphFamily::kLadder, "ladder"},
    {GraphFamily::kCircularLadder, "circular_ladder"},
    {GraphFamily::kMoebiusLadder, "moebius_ladder"},
    {GraphFamily::kComplete, "complete"},
    {GraphFamily::kBull, "bull"},
    {GraphFamily::kKite, "kite"},
    {GraphFamily::kRandomRegular, "random_regular"},
    {GraphFamily::kErdosRenyi, "erdos_renyi"},
}};

}  // namespace

std::string_view to_string(GraphFamily family) {
  for (auto [f, name] : kFamilyNames) {
    if (f == family) return name;
  }
  return "unknown";
}

GraphFamily parse_graph_family(std::string_view name) {
  for (auto [f, n] : kFamilyNames) {
    if (n == name) return f;
  }
  throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

Graph cycle_graph(int n) {
  require(n >= 3, "cycle needs n >= 3");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Graph::from_edges(n, edges);
}

Graph path_graph(int n) {
  require(n >= 2, "path needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
  return Graph::from_edges(n, edges);
}

Graph ladder_graph(int rungs) {
  require(rungs >= 1, "ladder needs at least one rung");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < rungs; ++i) {
    edges.push_back({i, i + 1});
    edges.push_back({rungs + i, rungs + i + 1});
  }
  for (int i = 0; i < rungs; ++i) edges.push_back({i, rungs + i});
  return Graph::from_edges(2 * rungs, edges);
}

Graph circular_ladder_graph(int rungs) {
  require(rungs >= 3, "circular ladder needs at least 3 rungs");
  std::vector<Edge> edges;
  for (int i = 0; i < rungs; ++i) {
    edges.push_back({i, (i + 1) % rungs});
    edges.push_back({rungs + i, rungs + (i + 1) % rungs});
    edges.push_back({i, rungs + i});
  }
  return Graph::from_edges(2 * rungs, edges);
}

Graph moebius_ladder_graph(int n) {
  require(n >= 6 && n % 2 == 0, "moebius ladder needs an even n >= 6");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  for (int i = 0; i < n / 2; ++i) edges.push_back({i, i + n / 2});
  return Graph::from_edges(n, edges);
}

Graph complete_graph(int n) {
  require(n >= 2, "complete graph needs n >= 2");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Graph::from_edges(n, edges);
}

Graph bull_graph() { return Graph::from_edges(5, {{0, 1}, {0, 3}, {0, 4}, {2, 4}, {3, 4}}); }

Graph kite_graph() {
  std::vector<Edge> edges;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) edges.push_back({i, j});
  for (int i = 5; i < 8; ++i)
    for (int j = i + 1; j < 8; ++j) edges.push_back({i, j});
  edges.push_back({4, 5});
  return Graph::from_edges(8, edges);
}

Graph random_regular_graph(int degree, int n, std::uint64_t seed) {
  require(degree >= 1 && n >= 2, "random regular graph needs degree >= 1 and n >= 2");
  require(degree < n, "random regular graph needs degree < n");
  require((static_cast<long>(degree) * n) % 2 == 0, "degree * n must be even for a regular graph");

  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  for (int x = 0; x < n; ++x)
    for (int k = 0; k < degree; ++k) stubs.push_back(x);

  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<Edge> edges;
    bool simple = true;
    for (std::size_t i = 0; i < stubs.size() && simple; i += 2) {
      Edge e{std::min(stubs[i], stubs[i + 1]), std::max(stubs[i], stubs[i + 1])};
      simple = e.first != e.second && std::find(edges.begin(), edges.end(), e) == edges.end();
      edges.push_back(e);
    }
    if (simple) return Graph::from_edges(n, edges);
  }
  throw std::runtime_error("no simple regular graph found after " + std::to_string(kMaxAttempts) +
                           " attempts");
}

Graph erdos_renyi_graph(int n, int m, std::uint64_t seed) {
  require(n >= 2, "random graph needs n >= 2");
  const int max_edges = n * (n - 1) / 2;
  require(m >= n - 1 && m <= max_edges,
          "random graph with n = " + std::to_string(n) + " needs n-1 <= m <= " +
              std::to_string(max_edges) + " edges, got " + std::to_string(m));

  std::vector<Edge> all;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) all.push_back({i, j});

  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng);
    std::vector<Edge> chosen(all.begin(), all.begin() + m);
    std::vector<int> degree(n, 0);
    for (const Edge& e : chosen) {
      ++degree[e.first];
      ++degree[e.second];
    }
    if (std::find(degree.begin(), degree.end(), 0) != degree.end()) continue;
    Graph g = Graph::from_edges(n, chosen);
    if (is_connected(g)) return g;
  }
  throw std::runtime_error("no connected random graph found after " + std::to_string(kMaxAttempts) +
                           " attempts");
}

bool is_connected(const Graph& graph) {
  std::vector<char> seen(graph.n_nodes(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int visited = 1;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : graph.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        stack.push_back(y);
      }
    }
  }
  return visited == graph.n_nodes();
}

Graph generate(const GraphSpec& spec) {
  switch (spec.family) {
    case GraphFamily::kCycle: return cycle_graph(spec.n);
    case GraphFamily::kPath: return path_graph(spec.n);
    case GraphFamily::kLadder: return ladder_graph(spec.rungs);
    case GraphFamily::kCircularLadder: return circular_ladder_graph(spec.rungs);
    case GraphFamily::kMoebiusLadder: return moebius_ladder_graph(spec.n);
    case GraphFamily::kComplete: return complete_graph(spec.n);
    case GraphFamily::kBull: return bull_graph();
    case GraphFamily::kKite: return kite_graph();
    case GraphFamily::kRandomRegular: return random_regular_graph(spec.degree, spec.n, spec.seed);
    case GraphFamily::kErdosRenyi: return erdos_renyi_graph(spec.n, spec.edges, spec.seed);
  }
  throw std::invalid_argument("unknown graph family");
}

}  // namespace qwalk
