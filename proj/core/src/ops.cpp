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

#include "qwalk/ops.hpp"

#include <bit>
#include <cmath>
#include <cstring>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace qwalk {
namespace {

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using Triplet = Eigen::Triplet<Complex>;

void require_degree(int d) {
  if (d < 1) throw std::invalid_argument("coin dimension must be >= 1, got " + std::to_string(d));
}

// Exact unit phase exp(2 pi i k / d) for k on the quarter turns.
Complex unit_phase(long k, int d) {
  k %= d;
  if ((4 * k) % d == 0) {
    switch ((4 * k) / d) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      case 3: return {0.0, -1.0};
    }
  }
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / d);
}

std::size_t packed(const Graph& g, int x, int c, std::uint64_t s) {
  return (static_cast<std::size_t>(g.offset(x) + c) << g.n_nodes()) + s;
}

std::uint64_t higher_neighbor_mask(const Graph& g, int x) {
  std::uint64_t mask = 0;
  for (int y : g.neighbors(x)) {
    if (y > x) mask |= std::uint64_t{1} << y;
  }
  return mask;
}

bool cz_flips(CzMode mode, std::uint64_t mask, int x, std::uint64_t s) {
  if (!spin_bit(s, x)) return false;
  if (mode == CzMode::kEdgeList) return (s & mask) != 0;
  return (std::popcount(s & mask) & 1) != 0;
}

std::uint64_t cz_mask(const Graph& g, CzMode mode, int x) {
  return mode == CzMode::kEdgeList ? higher_neighbor_mask(g, x) : g.neighbor_mask(x);
}

SparseMatrix from_triplets(std::size_t dim, const std::vector<Triplet>& triplets) {
  SparseMatrix m(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

}  // namespace

std::string_view to_string(CoinFamily coin) { return coin == CoinFamily::kGrover ? "grover" : "fourier"; }

std::string_view to_string(CzMode mode) { return mode == CzMode::kEdgeList ? "edge_list" : "incident"; }

CoinFamily parse_coin(std::string_view name) {
  if (name == "grover") return CoinFamily::kGrover;
  if (name == "fourier") return CoinFamily::kFourier;
  throw std::invalid_argument("unknown coin '" + std::string(name) + "' (expected grover or fourier)");
}

CzMode parse_cz_mode(std::string_view name) {
  if (name == "edge_list") return CzMode::kEdgeList;
  if (name == "incident") return CzMode::kIncident;
  throw std::invalid_argument("unknown cz mode '" + std::string(name) + "' (expected edge_list or incident)");
}

Eigen::MatrixXcd grover_coin(int d) {
  require_degree(d);
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Constant(d, d, Complex{2.0 / d, 0.0});
  g.diagonal().array() -= 1.0;
  return g;
}

Eigen::MatrixXcd fourier_coin(int d) {
  require_degree(d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  Eigen::MatrixXcd f(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) f(r, c) = scale * unit_phase(static_cast<long>(r) * c, d);
  return f;
}

Eigen::MatrixXcd coin_matrix(CoinFamily coin, int d) {
  return coin == CoinFamily::kGrover ? grover_coin(d) : fourier_coin(d);
}

Walk::Walk(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode)
    : graph_(std::move(graph)), coin_(coin), mode_(mode) {
  if (!graph_) throw std::invalid_argument("walk needs a graph");
  coins_by_degree_.resize(graph_->max_degree() + 1);
  for (int d = 1; d <= graph_->max_degree(); ++d) coins_by_degree_[d] = coin_matrix(coin, d);
  for (int x = 0; x < graph_->n_nodes(); ++x) cz_masks_.push_back(cz_mask(*graph_, mode, x));
}

void Walk::check(const PureState& state) const {
  if (state.graph_ptr() != graph_ && !(state.graph() == *graph_)) {
    throw std::invalid_argument("state and walk are defined on different graphs");
  }
}

void Walk::coin_in_place(PureState& state) const {
  check(state);
  const Graph& g = *graph_;
  const auto ns = static_cast<Eigen::Index>(state.spin_dim());
  for (int x = 0; x < g.n_nodes(); ++x) {
    const int d = g.degree(x);
    Eigen::Map<RowMajor> block(state.amplitudes().data() + state.offset(x, 0), d, ns);
    block = coins_by_degree_[d] * block;
  }
}

void Walk::move_in_place(PureState& state) const {
  check(state);
  const Graph& g = *graph_;
  std::vector<Complex> moved(state.size(), Complex{});
  const std::size_t ns = state.spin_dim();
  for (int x = 0; x < g.n_nodes(); ++x) {
    auto nb = g.neighbors(x);
    auto sub = g.subnodes(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Complex* src = state.amplitudes().data() + state.offset(x, static_cast<int>(i));
      std::copy(src, src + ns, moved.data() + state.offset(nb[i], sub[i]));
    }
  }
  std::copy(moved.begin(), moved.end(), state.amplitudes().begin());
}

void Walk::swap_in_place(PureState& state) const {
  check(state);
  const Graph& g = *graph_;
  for (int x = 0; x < g.n_nodes(); ++x) {
    if (g.degree(x) < 2) continue;
    const std::uint64_t bit = std::uint64_t{1} << x;
    for (std::uint64_t s = 0; s < state.spin_dim(); ++s) {
      if (s & bit) std::swap(state.at(x, 0, s), state.at(x, 1, s ^ bit));
    }
  }
}

void Walk::cz_in_place(PureState& state) const {
  check(state);
  const Graph& g = *graph_;
  for (int x = 0; x < g.n_nodes(); ++x) {
    const std::uint64_t mask = cz_masks_[x];
    for (std::uint64_t s = 0; s < state.spin_dim(); ++s) {
      if (!cz_flips(mode_, mask, x, s)) continue;
      for (int c = 0; c < g.degree(x); ++c) state.at(x, c, s) = -state.at(x, c, s);
    }
  }
}

void Walk::step_in_place(PureState& state) const {
  coin_in_place(state);
  move_in_place(state);
  swap_in_place(state);
  cz_in_place(state);
}

PureState apply_coin(PureState state, CoinFamily coin) {
  Walk(state.graph_ptr(), coin, CzMode::kEdgeList).coin_in_place(state);
  return state;
}

PureState apply_move(const PureState& state) {
  PureState out = state;
  Walk(state.graph_ptr(), CoinFamily::kGrover, CzMode::kEdgeList).move_in_place(out);
  return out;
}

PureState apply_swap(PureState state) {
  Walk(state.graph_ptr(), CoinFamily::kGrover, CzMode::kEdgeList).swap_in_place(state);
  return state;
}

PureState apply_cz(PureState state, CzMode mode) {
  Walk(state.graph_ptr(), CoinFamily::kGrover, mode).cz_in_place(state);
  return state;
}

PureState step(PureState state, CoinFamily coin, CzMode mode) {
  Walk(state.graph_ptr(), coin, mode).step_in_place(state);
  return state;
}

SparseMatrix coin_factor(const Graph& g, CoinFamily coin) {
  const std::size_t ns = std::size_t{1} << g.n_nodes();
  std::vector<Triplet> t;
  for (int x = 0; x < g.n_nodes(); ++x) {
    const int d = g.degree(x);
    const Eigen::MatrixXcd block = coin_matrix(coin, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) {
        if (block(r, c) == Complex{}) continue;
        for (std::uint64_t s = 0; s < ns; ++s) {
          t.emplace_back(static_cast<Eigen::Index>(packed(g, x, r, s)),
                         static_cast<Eigen::Index>(packed(g, x, c, s)), block(r, c));
        }
      }
    }
  }
  return from_triplets(packed_dimension(g), t);
}

SparseMatrix move_factor(const Graph& g) {
  const std::size_t ns = std::size_t{1} << g.n_nodes();
  std::vector<Triplet> t;
  for (int x = 0; x < g.n_nodes(); ++x) {
    auto nb = g.neighbors(x);
    auto sub = g.subnodes(x);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      for (std::uint64_t s = 0; s < ns; ++s) {
        t.emplace_back(static_cast<Eigen::Index>(packed(g, nb[i], sub[i], s)),
                       static_cast<Eigen::Index>(packed(g, x, static_cast<int>(i), s)), 1.0);
      }
    }
  }
  return from_triplets(packed_dimension(g), t);
}

SparseMatrix swap_factor(const Graph& g) {
  const std::size_t ns = std::size_t{1} << g.n_nodes();
  const std::size_t dim = packed_dimension(g);
  std::vector<char> exchanged(dim, 0);
  std::vector<Triplet> t;
  for (int x = 0; x < g.n_nodes(); ++x) {
    if (g.degree(x) < 2) continue;
    const std::uint64_t bit = std::uint64_t{1} << x;
    for (std::uint64_t s = 0; s < ns; ++s) {
      if (!(s & bit)) continue;
      const auto a = static_cast<Eigen::Index>(packed(g, x, 0, s));
      const auto b = static_cast<Eigen::Index>(packed(g, x, 1, s ^ bit));
      t.emplace_back(a, b, 1.0);
      t.emplace_back(b, a, 1.0);
      exchanged[a] = exchanged[b] = 1;
    }
  }
  for (std::size_t i = 0; i < dim; ++i) {
    if (!exchanged[i]) t.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i), 1.0);
  }
  return from_triplets(dim, t);
}

SparseMatrix cz_factor(const Graph& g, CzMode mode) {
  const std::size_t ns = std::size_t{1} << g.n_nodes();
  std::vector<Triplet> t;
  for (int x = 0; x < g.n_nodes(); ++x) {
    const std::uint64_t mask = cz_mask(g, mode, x);
    for (int c = 0; c < g.degree(x); ++c) {
      for (std::uint64_t s = 0; s < ns; ++s) {
        const auto i = static_cast<Eigen::Index>(packed(g, x, c, s));
        t.emplace_back(i, i, cz_flips(mode, mask, x, s) ? -1.0 : 1.0);
      }
    }
  }
  return from_triplets(packed_dimension(g), t);
}

EvolutionOperator::EvolutionOperator(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode,
                                     SparseMatrix matrix)
    : graph_(std::move(graph)), coin_(coin), mode_(mode), matrix_(std::move(matrix)) {}

double EvolutionOperator::unitarity_error() const {
  SparseMatrix gram = SparseMatrix(matrix_.adjoint()) * matrix_;
  double worst = 0.0;
  for (Eigen::Index k = 0; k < gram.outerSize(); ++k) {
    bool saw_diagonal = false;
    for (SparseMatrix::InnerIterator it(gram, k); it; ++it) {
      const bool diag = it.row() == it.col();
      saw_diagonal |= diag;
      worst = std::max(worst, std::abs(it.value() - (diag ? 1.0 : 0.0)));
    }
    if (!saw_diagonal) worst = std::max(worst, 1.0);
  }
  return worst;
}

EvolutionOperator build_unitary(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode,
                                const Guards& guards) {
  if (!graph) throw std::invalid_argument("build_unitary needs a graph");
  const std::size_t dim = packed_dimension(*graph);
  if (dim > guards.max_operator_dim) {
    throw GuardError("refusing to build a " + std::to_string(dim) + " x " + std::to_string(dim) +
                     " evolution operator (guard: " + std::to_string(guards.max_operator_dim) + ")");
  }
  const Graph& g = *graph;
  SparseMatrix moved = move_factor(g) * coin_factor(g, coin);
  SparseMatrix swapped = swap_factor(g) * moved;
  SparseMatrix u = cz_factor(g, mode) * swapped;
  u.makeCompressed();
  return EvolutionOperator(std::move(graph), coin, mode, std::move(u));
}

namespace {

void put_le64(std::ostream& out, double value) {
  std::uint64_t bits = std::bit_cast<std::uint64_t>(value);
  char bytes[8];
  for (int i = 0; i < 8; ++i) bytes[i] = static_cast<char>((bits >> (8 * i)) & 0xFF);
  out.write(bytes, 8);
}

}  // namespace

void write_operator_binary(const EvolutionOperator& op, std::ostream& out) {
  // Row-major order: walk the transpose's columns.
  SparseMatrix rows = op.matrix().transpose();
  const Eigen::Index dim = op.dimension();
  for (Eigen::Index r = 0; r < dim; ++r) {
    Eigen::Index next = 0;
    for (SparseMatrix::InnerIterator it(rows, r); it; ++it) {
      for (; next < it.index(); ++next) {
        put_le64(out, 0.0);
        put_le64(out, 0.0);
      }
      put_le64(out, it.value().real());
      put_le64(out, it.value().imag());
      ++next;
    }
    for (; next < dim; ++next) {
      put_le64(out, 0.0);
      put_le64(out, 0.0);
    }
  }
}

void write_operator_metadata(const EvolutionOperator& op, std::ostream& out) {
  const Graph& g = op.graph();
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  nlohmann::json meta = {
      {"dimension", op.dimension()},
      {"layout", "row-major"},
      {"scalar", "complex128 as (re, im) little-endian float64 pairs"},
      {"basis", "index = (offset[x] + c) * 2^N + s"},
      {"coin", to_string(op.coin())},
      {"cz_mode", to_string(op.cz_mode())},
      {"graph", {{"n_nodes", g.n_nodes()}, {"edges", edges}, {"offsets", g.offsets()}}},
      {"nonzeros", op.matrix().nonZeros()},
  };
  out << meta.dump(2) << '\n';
}

}  // namespace qwalk
