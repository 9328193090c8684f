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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"

namespace qwalk {

using Complex = std::complex<double>;

/// One basis ket |x c s>: particle at `node` with color `color`; bit x of
/// `spins` is the spin of node x (0 = up, 1 = down).
struct BasisKet {
  int node = 0;
  int color = 0;
  std::uint64_t spins = 0;

  friend auto operator<=>(const BasisKet&, const BasisKet&) = default;
};

/// Position of a ket in the packed basis, (sD[x] + c) * 2^N + s.
struct PackedIndex {
  std::size_t value = 0;

  friend auto operator<=>(const PackedIndex&, const PackedIndex&) = default;
};

/// Degree of freedom kept by a partial trace.
enum class Part { kPosition, kColor, kSpin };

inline int spin_bit(std::uint64_t spins, int node) { return static_cast<int>((spins >> node) & 1U); }

/// (sum_x d_x) * 2^N.
std::size_t packed_dimension(const Graph& graph);

/// Throws std::invalid_argument when the ket is not valid for the graph.
PackedIndex basis_index(const Graph& graph, const BasisKet& ket);
BasisKet unpack(const Graph& graph, PackedIndex index);

/// Pure state over |x c s> stored in the padded layout (N, d, 2^N) with
/// d = max degree; spin is the fastest index. Amplitudes with c >= d_x are
/// kept at zero by every operation in this library.
class PureState {
 public:
  /// All-zero state. Throws GuardError when N exceeds guards.max_state_nodes.
  explicit PureState(std::shared_ptr<const Graph> graph, const Guards& guards = {});

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }

  int n_nodes() const { return graph_->n_nodes(); }
  int colors() const { return graph_->max_degree(); }
  std::size_t spin_dim() const { return std::size_t{1} << graph_->n_nodes(); }
  std::size_t size() const { return amplitudes_.size(); }

  std::size_t offset(int node, int color) const {
    return (static_cast<std::size_t>(node) * colors() + color) << graph_->n_nodes();
  }
  Complex& at(int node, int color, std::uint64_t spins) { return amplitudes_[offset(node, color) + spins]; }
  const Complex& at(int node, int color, std::uint64_t spins) const {
    return amplitudes_[offset(node, color) + spins];
  }

  std::span<Complex> amplitudes() { return amplitudes_; }
  std::span<const Complex> amplitudes() const { return amplitudes_; }

  double norm_squared() const;
  /// Total probability on padding slots (c >= d_x); zero for valid states.
  double padding_weight() const;

 private:
  std::shared_ptr<const Graph> graph_;
  std::vector<Complex> amplitudes_;
};

/// Equal superposition of the listed kets, normalized.
/// Throws std::invalid_argument for an empty list, invalid or duplicate kets.
PureState initial_state(std::shared_ptr<const Graph> graph, std::span<const BasisKet> kets,
                        const Guards& guards = {});

/// Padded <-> packed conversion; both directions copy amplitudes exactly.
Eigen::VectorXcd to_packed(const PureState& state);
PureState from_packed(std::shared_ptr<const Graph> graph, const Eigen::VectorXcd& packed,
                      const Guards& guards = {});

/// Partial trace of |psi><psi| keeping `part`: N x N, d x d or 2^N x 2^N.
/// The spin matrix is refused with GuardError above guards.max_spin_density_nodes.
Eigen::MatrixXcd reduced_density(const PureState& state, Part part, const Guards& guards = {});

/// Debug snapshot: JSON array of {"x","c","s","re","im"} records for the
/// nonzero amplitudes.
void write_state_json(const PureState& state, std::ostream& out);
PureState read_state_json(std::shared_ptr<const Graph> graph, std::istream& in,
                          const Guards& guards = {});

}  // namespace qwalk
