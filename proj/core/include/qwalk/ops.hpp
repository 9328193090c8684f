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

#include <iosfwd>
#include <memory>
#include <string_view>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/SparseCore>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

enum class CoinFamily { kGrover, kFourier };

/// How the spin-spin phase gate picks its edges.
///  kEdgeList: the particle at x picks up -1 if some edge (x, y) with x < y
///             has both spins down; the sign is set once, not once per edge.
///  kIncident: the particle at x picks up (-1)^k, k = number of neighbors y
///             of x with s_x = s_y = 1.
enum class CzMode { kEdgeList, kIncident };

std::string_view to_string(CoinFamily coin);
std::string_view to_string(CzMode mode);
/// Accepts "grover" / "fourier"; throws std::invalid_argument otherwise.
CoinFamily parse_coin(std::string_view name);
/// Accepts "edge_list" / "incident"; throws std::invalid_argument otherwise.
CzMode parse_cz_mode(std::string_view name);

/// (2/d) J - I.
Eigen::MatrixXcd grover_coin(int d);
/// exp(2 pi i c c' / d) / sqrt(d). Phases that are multiples of pi/2 are exact.
Eigen::MatrixXcd fourier_coin(int d);
Eigen::MatrixXcd coin_matrix(CoinFamily coin, int d);

// Single gates. Each returns a new state; the argument is not modified.
PureState apply_coin(PureState state, CoinFamily coin);
PureState apply_move(const PureState& state);
PureState apply_swap(PureState state);
PureState apply_cz(PureState state, CzMode mode);

/// One step U = CZ SW MV CO.
PureState step(PureState state, CoinFamily coin, CzMode mode);

/// Stepper with the per-degree coin blocks and spin masks precomputed.
/// Stateless after construction; step() may be called concurrently on
/// different states.
class Walk {
 public:
  Walk(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode);

  const Graph& graph() const { return *graph_; }
  CoinFamily coin() const { return coin_; }
  CzMode cz_mode() const { return mode_; }

  void coin_in_place(PureState& state) const;
  void move_in_place(PureState& state) const;
  void swap_in_place(PureState& state) const;
  void cz_in_place(PureState& state) const;
  void step_in_place(PureState& state) const;

 private:
  void check(const PureState& state) const;

  std::shared_ptr<const Graph> graph_;
  CoinFamily coin_;
  CzMode mode_;
  std::vector<Eigen::MatrixXcd> coins_by_degree_;
  std::vector<std::uint64_t> cz_masks_;
};

using SparseMatrix = Eigen::SparseMatrix<Complex>;

// Factor matrices over the packed basis (sum_x d_x) * 2^N.
SparseMatrix coin_factor(const Graph& graph, CoinFamily coin);
SparseMatrix move_factor(const Graph& graph);
SparseMatrix swap_factor(const Graph& graph);
SparseMatrix cz_factor(const Graph& graph, CzMode mode);

/// U over the packed basis. At most max_degree nonzeros per column, so the
/// matrix is held sparse; dense() materializes it.
class EvolutionOperator {
 public:
  EvolutionOperator(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode, SparseMatrix matrix);

  const Graph& graph() const { return *graph_; }
  const std::shared_ptr<const Graph>& graph_ptr() const { return graph_; }
  CoinFamily coin() const { return coin_; }
  CzMode cz_mode() const { return mode_; }
  Eigen::Index dimension() const { return matrix_.rows(); }

  const SparseMatrix& matrix() const { return matrix_; }
  Eigen::MatrixXcd dense() const { return Eigen::MatrixXcd(matrix_); }
  Eigen::VectorXcd apply(const Eigen::VectorXcd& v) const { return matrix_ * v; }

  /// max |U^dagger U - I|.
  double unitarity_error() const;

 private:
  std::shared_ptr<const Graph> graph_;
  CoinFamily coin_;
  CzMode mode_;
  SparseMatrix matrix_;
};

/// CZ * SW * MV * CO from the four factor matrices.
/// Throws GuardError when the packed dimension exceeds guards.max_operator_dim.
EvolutionOperator build_unitary(std::shared_ptr<const Graph> graph, CoinFamily coin, CzMode mode,
                                const Guards& guards = {});

/// Dense row-major dump: dim * dim pairs (re, im) of little-endian float64.
void write_operator_binary(const EvolutionOperator& op, std::ostream& out);
/// JSON metadata describing the binary dump.
void write_operator_metadata(const EvolutionOperator& op, std::ostream& out);

}  // namespace qwalk
