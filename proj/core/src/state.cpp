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

#include "qwalk/state.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace qwalk {
namespace {

void check_ket(const Graph& graph, const BasisKet& ket) {
  if (ket.node < 0 || ket.node >= graph.n_nodes()) {
    throw std::invalid_argument("ket node " + std::to_string(ket.node) + " out of range");
  }
  if (ket.color < 0 || ket.color >= graph.degree(ket.node)) {
    throw std::invalid_argument("ket color " + std::to_string(ket.color) + " is not below degree " +
                                std::to_string(graph.degree(ket.node)) + " of node " +
                                std::to_string(ket.node));
  }
  if (ket.spins >= (std::uint64_t{1} << graph.n_nodes())) {
    throw std::invalid_argument("ket spin configuration " + std::to_string(ket.spins) + " out of range");
  }
}

using RowMajor = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstRowMap = Eigen::Map<const RowMajor>;

}  // namespace

std::size_t packed_dimension(const Graph& graph) {
  return static_cast<std::size_t>(graph.degree_sum()) << graph.n_nodes();
}

PackedIndex basis_index(const Graph& graph, const BasisKet& ket) {
  check_ket(graph, ket);
  return {(static_cast<std::size_t>(graph.offset(ket.node) + ket.color) << graph.n_nodes()) + ket.spins};
}

BasisKet unpack(const Graph& graph, PackedIndex index) {
  if (index.value >= packed_dimension(graph)) {
    throw std::invalid_argument("packed index " + std::to_string(index.value) + " out of range");
  }
  const int block = static_cast<int>(index.value >> graph.n_nodes());
  const std::uint64_t spins = index.value & ((std::uint64_t{1} << graph.n_nodes()) - 1);
  const auto& offsets = graph.offsets();
  auto it = std::upper_bound(offsets.begin(), offsets.end(), block);
  const int node = static_cast<int>(it - offsets.begin()) - 1;
  return {node, block - offsets[node], spins};
}

PureState::PureState(std::shared_ptr<const Graph> graph, const Guards& guards) : graph_(std::move(graph)) {
  if (!graph_) throw std::invalid_argument("state needs a graph");
  if (graph_->n_nodes() > guards.max_state_nodes) {
    throw GuardError("refusing to allocate a state on " + std::to_string(graph_->n_nodes()) +
                     " nodes (guard: " + std::to_string(guards.max_state_nodes) + ")");
  }
  amplitudes_.assign(static_cast<std::size_t>(n_nodes()) * colors() * spin_dim(), Complex{});
}

double PureState::norm_squared() const {
  double sum = 0.0;
  for (const Complex& a : amplitudes_) sum += std::norm(a);
  return sum;
}

double PureState::padding_weight() const {
  double sum = 0.0;
  for (int x = 0; x < n_nodes(); ++x) {
    for (int c = graph_->degree(x); c < colors(); ++c) {
      const Complex* row = amplitudes_.data() + offset(x, c);
      for (std::size_t s = 0; s < spin_dim(); ++s) sum += std::norm(row[s]);
    }
  }
  return sum;
}

PureState initial_state(std::shared_ptr<const Graph> graph, std::span<const BasisKet> kets,
                        const Guards& guards) {
  if (kets.empty()) throw std::invalid_argument("initial state needs at least one ket");
  PureState state(std::move(graph), guards);
  std::vector<BasisKet> sorted(kets.begin(), kets.end());
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("duplicate ket in initial state");
  }
  const double amplitude = 1.0 / std::sqrt(static_cast<double>(kets.size()));
  for (const BasisKet& ket : kets) {
    check_ket(state.graph(), ket);
    state.at(ket.node, ket.color, ket.spins) = amplitude;
  }
  return state;
}

Eigen::VectorXcd to_packed(const PureState& state) {
  const Graph& g = state.graph();
  Eigen::VectorXcd packed(static_cast<Eigen::Index>(packed_dimension(g)));
  const std::size_t ns = state.spin_dim();
  for (int x = 0; x < g.n_nodes(); ++x) {
    for (int c = 0; c < g.degree(x); ++c) {
      const Complex* src = state.amplitudes().data() + state.offset(x, c);
      std::copy(src, src + ns, packed.data() + ((static_cast<std::size_t>(g.offset(x) + c)) * ns));
    }
  }
  return packed;
}

PureState from_packed(std::shared_ptr<const Graph> graph, const Eigen::VectorXcd& packed,
                      const Guards& guards) {
  PureState state(std::move(graph), guards);
  const Graph& g = state.graph();
  if (static_cast<std::size_t>(packed.size()) != packed_dimension(g)) {
    throw std::invalid_argument("packed vector has dimension " + std::to_string(packed.size()) +
                                ", expected " + std::to_string(packed_dimension(g)));
  }
  const std::size_t ns = state.spin_dim();
  for (int x = 0; x < g.n_nodes(); ++x) {
    for (int c = 0; c < g.degree(x); ++c) {
      const Complex* src = packed.data() + (static_cast<std::size_t>(g.offset(x) + c)) * ns;
      std::copy(src, src + ns, state.amplitudes().data() + state.offset(x, c));
    }
  }
  return state;
}

Eigen::MatrixXcd reduced_density(const PureState& state, Part part, const Guards& guards) {
  const auto n = static_cast<Eigen::Index>(state.n_nodes());
  const auto d = static_cast<Eigen::Index>(state.colors());
  const auto ns = static_cast<Eigen::Index>(state.spin_dim());
  const Complex* data = state.amplitudes().data();

  Eigen::MatrixXcd rho;
  switch (part) {
    case Part::kPosition: {
      ConstRowMap m(data, n, d * ns);
      rho = m * m.adjoint();
      break;
    }
    case Part::kColor: {
      rho = Eigen::MatrixXcd::Zero(d, d);
      for (Eigen::Index x = 0; x < n; ++x) {
        ConstRowMap block(data + x * d * ns, d, ns);
        rho += block * block.adjoint();
      }
      break;
    }
    case Part::kSpin: {
      if (state.n_nodes() > guards.max_spin_density_nodes) {
        throw GuardError("refusing to build the " + std::to_string(ns) + " x " + std::to_string(ns) +
                         " spin density matrix for N = " + std::to_string(n) +
                         " (guard: " + std::to_string(guards.max_spin_density_nodes) + ")");
      }
      ConstRowMap m(data, n * d, ns);
      rho = m.transpose() * m.conjugate();
      break;
    }
  }
  // Remove round-off asymmetry so downstream Hermitian solvers see an exact
  // Hermitian matrix.
  Eigen::MatrixXcd herm = 0.5 * (rho + rho.adjoint());
  return herm;
}

void write_state_json(const PureState& state, std::ostream& out) {
  nlohmann::json records = nlohmann::json::array();
  const Graph& g = state.graph();
  for (int x = 0; x < g.n_nodes(); ++x) {
    for (int c = 0; c < state.colors(); ++c) {
      for (std::uint64_t s = 0; s < state.spin_dim(); ++s) {
        const Complex a = state.at(x, c, s);
        if (a == Complex{}) continue;
        records.push_back({{"x", x}, {"c", c}, {"s", s}, {"re", a.real()}, {"im", a.imag()}});
      }
    }
  }
  out << records.dump(1) << '\n';
}

PureState read_state_json(std::shared_ptr<const Graph> graph, std::istream& in, const Guards& guards) {
  PureState state(std::move(graph), guards);
  const nlohmann::json records = nlohmann::json::parse(in);
  if (!records.is_array()) throw std::invalid_argument("state snapshot must be a JSON array");
  for (const auto& r : records) {
    BasisKet ket{r.at("x").get<int>(), r.at("c").get<int>(), r.at("s").get<std::uint64_t>()};
    check_ket(state.graph(), ket);
    state.at(ket.node, ket.color, ket.spins) = {r.at("re").get<double>(), r.at("im").get<double>()};
  }
  return state;
}

}  // namespace qwalk
