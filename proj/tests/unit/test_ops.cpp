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

#include <gtest/gtest.h>

#include <cmath>
#include <cstring>
#include <map>
#include <numbers>
#include <random>
#include <sstream>
#include <tuple>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/observables.hpp"
#include "qwalk/ops.hpp"
#include "test_util.hpp"

namespace qwalk {
namespace {

using testing::max_abs_diff;
using testing::random_state;
using testing::share;

constexpr double kTight = 1e-12;

PureState ket_state(const std::shared_ptr<const Graph>& g, BasisKet ket) {
  return initial_state(g, std::span(&ket, 1));
}

TEST(Coins, GroverExamples) {
  Eigen::MatrixXcd sx(2, 2);
  sx << 0, 1, 1, 0;
  EXPECT_LT((grover_coin(2) - sx).cwiseAbs().maxCoeff(), 1e-15);
  Eigen::MatrixXcd g4 = Eigen::MatrixXcd::Constant(4, 4, 0.5);
  g4.diagonal().setConstant(-0.5);
  EXPECT_LT((grover_coin(4) - g4).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(grover_coin(1)(0, 0), Complex(1.0));
  EXPECT_THROW(grover_coin(0), std::invalid_argument);
}

TEST(Coins, FourierExamples) {
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd h(2, 2);
  h << r, r, r, -r;
  EXPECT_LT((fourier_coin(2) - h).cwiseAbs().maxCoeff(), 1e-15);
  const Eigen::MatrixXcd f4 = fourier_coin(4);
  const Complex i(0.0, 1.0);
  const Complex row[4] = {1.0, i, -1.0, -i};
  for (int c = 0; c < 4; ++c) EXPECT_LT(std::abs(f4(1, c) - 0.5 * row[c]), 1e-15);
  EXPECT_THROW(fourier_coin(0), std::invalid_argument);
}

TEST(Coins, UnitaryAndInvolutive) {
  for (int d = 1; d <= 8; ++d) {
    const Eigen::MatrixXcd g = grover_coin(d);
    const Eigen::MatrixXcd f = fourier_coin(d);
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(d, d);
    EXPECT_LT((g * g - id).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_EQ((g - g.transpose()).cwiseAbs().maxCoeff(), 0.0);
    EXPECT_LT((f.adjoint() * f - id).cwiseAbs().maxCoeff(), 1e-14);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b) {
        EXPECT_NEAR(std::abs(f(a, b)), 1.0 / std::sqrt(d), 1e-15);
        const double angle = 2.0 * std::numbers::pi * ((a * b) % d) / d;
        EXPECT_LT(std::abs(f(a, b) - std::polar(1.0 / std::sqrt(d), angle)), 1e-15);
      }
  }
}

TEST(Names, ParseAndPrint) {
  EXPECT_EQ(parse_coin("grover"), CoinFamily::kGrover);
  EXPECT_EQ(parse_coin("fourier"), CoinFamily::kFourier);
  EXPECT_EQ(parse_cz_mode("edge_list"), CzMode::kEdgeList);
  EXPECT_EQ(parse_cz_mode("incident"), CzMode::kIncident);
  EXPECT_EQ(to_string(CzMode::kIncident), "incident");
  EXPECT_THROW(parse_coin("hadamard"), std::invalid_argument);
  EXPECT_THROW(parse_cz_mode("both"), std::invalid_argument);
}

TEST(Gates, CoinExamples) {
  auto g = share(bull_graph());
  const std::uint64_t s = 13;
  const PureState out = apply_coin(ket_state(g, {0, 0, s}), CoinFamily::kGrover);
  EXPECT_NEAR(out.at(0, 0, s).real(), -1.0 / 3.0, 1e-15);
  EXPECT_NEAR(out.at(0, 1, s).real(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(out.at(0, 2, s).real(), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(out.norm_squared(), 1.0, 1e-15);
  const PureState leaf = apply_coin(ket_state(g, {1, 0, s}), CoinFamily::kGrover);
  EXPECT_EQ(leaf.at(1, 0, s), Complex(1.0));
}

TEST(Gates, MoveExample) {
  auto g = share(bull_graph());
  const PureState out = apply_move(ket_state(g, {0, 1, 6}));
  EXPECT_EQ(out.at(3, 0, 6), Complex(1.0));
  EXPECT_DOUBLE_EQ(out.norm_squared(), 1.0);
}

TEST(Gates, SwapExamples) {
  auto g = share(bull_graph());
  const int x = 3;
  const std::uint64_t s = (1U << x) | 1U;
  PureState out = apply_swap(ket_state(g, {x, 0, s}));
  EXPECT_EQ(out.at(x, 1, s - (1U << x)), Complex(1.0));
  out = apply_swap(ket_state(g, {x, 1, 1U}));
  EXPECT_EQ(out.at(x, 0, s), Complex(1.0));
  for (const BasisKet fixed : {BasisKet{x, 0, 1U}, BasisKet{x, 1, s}, BasisKet{0, 2, 31U}, BasisKet{1, 0, 2U}}) {
    const PureState in = ket_state(g, fixed);
    EXPECT_EQ(max_abs_diff(apply_swap(in), in), 0.0);
  }
}

TEST(Gates, CzExamples) {
  auto g = share(bull_graph());
  for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident}) {
    for (int x = 0; x < 5; ++x) {
      const PureState in = ket_state(g, {x, 0, 0});
      EXPECT_EQ(max_abs_diff(apply_cz(in, mode), in), 0.0);
    }
  }
  const std::uint64_t s34 = (1U << 3) | (1U << 4);
  EXPECT_EQ(apply_cz(ket_state(g, {4, 0, s34}), CzMode::kIncident).at(4, 0, s34), Complex(-1.0));
  EXPECT_EQ(apply_cz(ket_state(g, {4, 0, s34}), CzMode::kEdgeList).at(4, 0, s34), Complex(1.0));
  const std::uint64_t s01 = 0b11;
  EXPECT_EQ(apply_cz(ket_state(g, {1, 0, s01}), CzMode::kEdgeList).at(1, 0, s01), Complex(1.0));
  EXPECT_EQ(apply_cz(ket_state(g, {1, 0, s01}), CzMode::kIncident).at(1, 0, s01), Complex(-1.0));
  EXPECT_EQ(apply_cz(ket_state(g, {0, 0, s01}), CzMode::kEdgeList).at(0, 0, s01), Complex(-1.0));
  // Node 0 with neighbors 1 and 3 both down: two edges, one sign flip in
  // edge_list, (-1)^2 in incident.
  const std::uint64_t s013 = 0b1011;
  EXPECT_EQ(apply_cz(ket_state(g, {0, 0, s013}), CzMode::kEdgeList).at(0, 0, s013), Complex(-1.0));
  EXPECT_EQ(apply_cz(ket_state(g, {0, 0, s013}), CzMode::kIncident).at(0, 0, s013), Complex(1.0));
}

TEST(Gates, InvolutionsOnRandomStates) {
  std::mt19937_64 rng(17);
  for (const Graph& graph : {bull_graph(), kite_graph(), cycle_graph(5), path_graph(4)}) {
    auto g = share(graph);
    for (int trial = 0; trial < 25; ++trial) {
      const PureState psi = random_state(g, rng);
      EXPECT_LT(max_abs_diff(apply_move(apply_move(psi)), psi), kTight);
      EXPECT_LT(max_abs_diff(apply_swap(apply_swap(psi)), psi), kTight);
      EXPECT_LT(max_abs_diff(apply_coin(apply_coin(psi, CoinFamily::kGrover), CoinFamily::kGrover), psi), kTight);
      for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident})
        EXPECT_LT(max_abs_diff(apply_cz(apply_cz(psi, mode), mode), psi), kTight);
      EXPECT_NEAR(apply_coin(psi, CoinFamily::kFourier).norm_squared(), 1.0, kTight);
      EXPECT_NEAR(apply_move(psi).norm_squared(), 1.0, kTight);
    }
  }
}

TEST(Gates, PaddingStaysExactlyZero) {
  std::mt19937_64 rng(23);
  auto g = share(kite_graph());
  PureState psi = random_state(g, rng);
  Walk walk(g, CoinFamily::kFourier, CzMode::kIncident);
  for (int t = 0; t < 30; ++t) {
    walk.step_in_place(psi);
    ASSERT_EQ(psi.padding_weight(), 0.0);
  }
  psi = apply_move(apply_coin(psi, CoinFamily::kGrover));
  EXPECT_EQ(psi.padding_weight(), 0.0);
}

TEST(Step, ZeroStepsAndNormOnCube) {
  auto g = share(circular_ladder_graph(4));
  const PureState psi0 = ket_state(g, {0, 0, 0});
  EvolveOptions opt;
  opt.steps = 0;
  opt.entropies = false;
  PureState final_state(g);
  evolve(psi0, CoinFamily::kGrover, CzMode::kEdgeList, opt, &final_state);
  EXPECT_EQ(max_abs_diff(final_state, psi0), 0.0);

  PureState psi = psi0;
  Walk walk(g, CoinFamily::kGrover, CzMode::kEdgeList);
  for (int t = 0; t < 400; ++t) walk.step_in_place(psi);
  EXPECT_NEAR(psi.norm_squared(), 1.0, 1e-9);
}

TEST(Step, CubeSupportAlternates) {
  auto g = share(circular_ladder_graph(4));
  PureState psi = ket_state(g, {0, 0, 0});
  const std::vector<int> even{0, 2, 5, 7};
  for (int t = 0; t <= 40; ++t) {
    const auto p = position_distribution(psi);
    double off = 0.0;
    for (int x = 0; x < 8; ++x) {
      const bool in_even = std::ranges::find(even, x) != even.end();
      if (in_even != (t % 2 == 0)) off += p[x];
    }
    ASSERT_LT(off, 1e-10) << "t = " << t;
    psi = step(std::move(psi), CoinFamily::kGrover, CzMode::kEdgeList);
  }
}

TEST(Step, WalkMatchesPureFunctions) {
  std::mt19937_64 rng(29);
  auto g = share(bull_graph());
  for (CoinFamily coin : {CoinFamily::kGrover, CoinFamily::kFourier}) {
    for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident}) {
      PureState psi = random_state(g, rng);
      PureState expected = apply_cz(apply_swap(apply_move(apply_coin(psi, coin))), mode);
      Walk(g, coin, mode).step_in_place(psi);
      EXPECT_LT(max_abs_diff(psi, expected), 1e-15);
    }
  }
}

// Column x c s of U computed from the gate definitions over a sparse
// map of kets: coin, move to (G[x][c'], S[x][c']), swap, phase.
using KetMap = std::map<std::tuple<int, int, std::uint64_t>, Complex>;

KetMap oracle_column(const Graph& g, CoinFamily coin, CzMode mode, BasisKet ket) {
  KetMap after_coin;
  const Eigen::MatrixXcd block = coin_matrix(coin, g.degree(ket.node));
  for (int c = 0; c < g.degree(ket.node); ++c) after_coin[{ket.node, c, ket.spins}] += block(c, ket.color);

  KetMap out;
  for (const auto& [key, amp] : after_coin) {
    auto [x, c, s] = key;
    const int y = g.neighbors(x)[c];
    const int cy = g.subnodes(x)[c];
    int cc = cy;
    std::uint64_t ss = s;
    if (g.degree(y) > 1) {
      const bool down = spin_bit(s, y) == 1;
      if (cy == 0 && down) {
        cc = 1;
        ss = s ^ (std::uint64_t{1} << y);
      } else if (cy == 1 && !down) {
        cc = 0;
        ss = s ^ (std::uint64_t{1} << y);
      }
    }
    double sign = 1.0;
    if (mode == CzMode::kIncident) {
      for (int z : g.neighbors(y))
        if (spin_bit(ss, y) == 1 && spin_bit(ss, z) == 1) sign = -sign;
    } else {
      bool hit = false;
      for (const Edge& e : g.edges())
        if (e.first == y && spin_bit(ss, e.first) == 1 && spin_bit(ss, e.second) == 1) hit = true;
      if (hit) sign = -1.0;
    }
    out[{y, cc, ss}] += sign * amp;
  }
  return out;
}

void check_against_oracles(const Graph& graph, CoinFamily coin, CzMode mode) {
  auto g = share(graph);
  const EvolutionOperator op = build_unitary(g, coin, mode);
  ASSERT_LE(op.dimension(), 1024);
  EXPECT_LT(op.unitarity_error(), 1e-10);
  const Eigen::MatrixXcd u = op.dense();
  EXPECT_LT((u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff(), 1e-10);
  const Walk walk(g, coin, mode);
  double worst_step = 0.0;
  double worst_oracle = 0.0;
  for (Eigen::Index j = 0; j < op.dimension(); ++j) {
    const BasisKet ket = unpack(graph, PackedIndex{static_cast<std::size_t>(j)});
    PureState psi = ket_state(g, ket);
    walk.step_in_place(psi);
    worst_step = std::max(worst_step, (to_packed(psi) - u.col(j)).cwiseAbs().maxCoeff());
    Eigen::VectorXcd col = Eigen::VectorXcd::Zero(op.dimension());
    for (const auto& [key, amp] : oracle_column(graph, coin, mode, ket)) {
      auto [x, c, s] = key;
      col[static_cast<Eigen::Index>(basis_index(graph, {x, c, s}).value)] += amp;
    }
    worst_oracle = std::max(worst_oracle, (col - u.col(j)).cwiseAbs().maxCoeff());
  }
  EXPECT_LT(worst_step, 1e-12);
  EXPECT_LT(worst_oracle, 1e-12);
}

TEST(EvolutionOperator, MatchesStepAndOracleOnAllBasisVectors) {
  const std::vector<Graph> graphs{bull_graph(), cycle_graph(5), path_graph(5),
                                  Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {0, 2}}), complete_graph(4)};
  for (const Graph& g : graphs)
    for (CoinFamily coin : {CoinFamily::kGrover, CoinFamily::kFourier})
      for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident}) check_against_oracles(g, coin, mode);
}

TEST(EvolutionOperator, FactorsAreUnitaryAndInvolutive) {
  const Graph g = kite_graph();
  for (const SparseMatrix& f : {coin_factor(g, CoinFamily::kGrover), move_factor(g), swap_factor(g),
                                cz_factor(g, CzMode::kEdgeList), cz_factor(g, CzMode::kIncident)}) {
    SparseMatrix id(f.rows(), f.cols());
    id.setIdentity();
    EXPECT_LT(Eigen::MatrixXcd(SparseMatrix(f * f) - id).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(Eigen::MatrixXcd(SparseMatrix(f.adjoint() * f) - id).cwiseAbs().maxCoeff(), 1e-14);
  }
  const SparseMatrix fc = coin_factor(g, CoinFamily::kFourier);
  SparseMatrix id(fc.rows(), fc.cols());
  id.setIdentity();
  EXPECT_LT(Eigen::MatrixXcd(SparseMatrix(fc.adjoint() * fc) - id).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(EvolutionOperator, DimensionsAndGuard) {
  EXPECT_EQ(build_unitary(share(bull_graph()), CoinFamily::kGrover, CzMode::kEdgeList).dimension(), 320);
  const EvolutionOperator cube = build_unitary(share(circular_ladder_graph(4)), CoinFamily::kGrover, CzMode::kEdgeList);
  EXPECT_EQ(cube.dimension(), 6144);
  EXPECT_LT(cube.unitarity_error(), 1e-10);
  EXPECT_EQ(build_unitary(share(moebius_ladder_graph(8)), CoinFamily::kFourier, CzMode::kEdgeList).dimension(), 6144);
  Guards small;
  small.max_operator_dim = 300;
  EXPECT_THROW(build_unitary(share(bull_graph()), CoinFamily::kGrover, CzMode::kEdgeList, small), GuardError);
}

TEST(EvolutionOperator, BinaryDump) {
  const EvolutionOperator op = build_unitary(share(bull_graph()), CoinFamily::kFourier, CzMode::kIncident);
  std::ostringstream out;
  write_operator_binary(op, out);
  const std::string bytes = out.str();
  const Eigen::Index n = op.dimension();
  ASSERT_EQ(bytes.size(), static_cast<std::size_t>(n * n * 16));
  const Eigen::MatrixXcd u = op.dense();
  double worst = 0.0;
  for (Eigen::Index r = 0; r < n; ++r)
    for (Eigen::Index c = 0; c < n; ++c) {
      double pair[2];
      std::memcpy(pair, bytes.data() + (r * n + c) * 16, 16);
      worst = std::max(worst, std::abs(Complex(pair[0], pair[1]) - u(r, c)));
    }
  EXPECT_EQ(worst, 0.0);

  std::ostringstream meta;
  write_operator_metadata(op, meta);
  const auto json = nlohmann::json::parse(meta.str());
  EXPECT_EQ(json.at("dimension").get<int>(), 320);
  EXPECT_EQ(json.at("coin").get<std::string>(), "fourier");
  EXPECT_EQ(json.at("cz_mode").get<std::string>(), "incident");
}

}  // namespace
}  // namespace qwalk
