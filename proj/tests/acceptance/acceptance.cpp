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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Expensive spectra are computed once and shared.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qwalk/graph.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/ops.hpp"
#include "qwalk/spectral.hpp"
#include "qwalk/state.hpp"

#ifndef QWALK_CHAIN_GRAPH
#error "QWALK_CHAIN_GRAPH must name the chain edge-list file"
#endif

namespace {

using namespace qwalk;
using Clock = std::chrono::steady_clock;

// Random G(8,3): 8 nodes, 12 edges (mean degree 3), fixed seed.
constexpr std::uint64_t kRandomGraphSeed = 0;
constexpr int kSteps = 400;
constexpr int kWindowStart = 360;
constexpr int kWindowEnd = 400;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::shared_ptr<const Graph> share(Graph g) { return std::make_shared<const Graph>(std::move(g)); }

PureState origin(const std::shared_ptr<const Graph>& g) {
  const BasisKet ket{0, 0, 0};
  return initial_state(g, std::span(&ket, 1));
}

PureState random_state(const std::shared_ptr<const Graph>& g, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  PureState s(g);
  for (int x = 0; x < g->n_nodes(); ++x)
    for (int c = 0; c < g->degree(x); ++c)
      for (std::uint64_t k = 0; k < s.spin_dim(); ++k) s.at(x, c, k) = {normal(rng), normal(rng)};
  const double scale = 1.0 / std::sqrt(s.norm_squared());
  for (auto& a : s.amplitudes()) a *= scale;
  return s;
}

double max_abs_diff(const PureState& a, const PureState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  return worst;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(4);
  s << v;
  return s.str();
}

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void check(bool ok, const std::string& note) {
    pass = pass && ok;
    notes.push_back(std::string(ok ? "" : "!") + note);
  }
};

// Shared expensive results.
struct Context {
  std::shared_ptr<const Graph> cube = share(circular_ladder_graph(4));
  std::shared_ptr<const Graph> moebius = share(moebius_ladder_graph(8));
  std::shared_ptr<const Graph> random_graph = share(erdos_renyi_graph(8, 12, kRandomGraphSeed));
  std::shared_ptr<const Graph> chain;
  std::optional<SpectralData> moebius_spectrum;
  std::optional<SpectralData> random_spectrum;
  std::optional<SpectralData> chain_spectrum;
  std::optional<Trajectory> random_trajectory;
  std::vector<std::pair<std::string, Trajectory>> stationary;  // AC4/AC5 runs
};

Trajectory run(const std::shared_ptr<const Graph>& g, CoinFamily coin, bool entropies) {
  EvolveOptions opt;
  opt.steps = kSteps;
  opt.entropies = entropies;
  return evolve(origin(g), coin, CzMode::kEdgeList, opt);
}

double window_mean(const Trajectory& tr, double StepRecord::*field) {
  double sum = 0.0;
  for (int t = kWindowStart; t <= kWindowEnd; ++t) sum += tr.records[t].*field;
  return sum / (kWindowEnd - kWindowStart + 1);
}

Outcome ac1_unitarity(Context&) {
  Outcome o;
  const auto start = Clock::now();
  for (const Graph& graph : {bull_graph(), cycle_graph(5)}) {
    auto g = share(graph);
    for (CoinFamily coin : {CoinFamily::kGrover, CoinFamily::kFourier}) {
      for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident}) {
        const EvolutionOperator op = build_unitary(g, coin, mode);
        const Eigen::MatrixXcd u = op.dense();
        const double unitarity =
            (u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff();
        const Walk walk(g, coin, mode);
        double worst = 0.0;
        for (Eigen::Index j = 0; j < op.dimension(); ++j) {
          const BasisKet ket = unpack(graph, PackedIndex{static_cast<std::size_t>(j)});
          PureState psi = initial_state(g, std::span(&ket, 1));
          walk.step_in_place(psi);
          worst = std::max(worst, (to_packed(psi) - u.col(j)).cwiseAbs().maxCoeff());
        }
        const std::string tag = "N=" + std::to_string(graph.n_nodes()) + "/" + std::string(to_string(coin)) + "/" +
                                std::string(to_string(mode));
        o.check(unitarity < 1e-10, tag + " |UtU-I|=" + fmt(unitarity));
        o.check(worst < 1e-12, tag + " |U-step|=" + fmt(worst));
      }
    }
  }
  const double elapsed = seconds_since(start);
  o.check(elapsed < 10.0, "time " + fmt(elapsed) + " s");
  return o;
}

Outcome ac2_coins(Context& ctx) {
  Outcome o;
  const double r = 1.0 / std::sqrt(2.0);
  Eigen::MatrixXcd sx(2, 2);
  sx << 0, 1, 1, 0;
  Eigen::MatrixXcd h(2, 2);
  h << r, r, r, -r;
  const double dg = (grover_coin(2) - sx).cwiseAbs().maxCoeff();
  const double df = (fourier_coin(2) - h).cwiseAbs().maxCoeff();
  o.check(dg <= 1e-15, "grover(2)-sx " + fmt(dg));
  o.check(df <= 1e-15, "fourier(2)-H " + fmt(df));
  std::mt19937_64 rng(2024);
  for (const auto& g : {share(bull_graph()), share(cycle_graph(5)), share(kite_graph()), ctx.cube}) {
    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      const PureState psi = random_state(g, rng);
      worst = std::max(worst, max_abs_diff(apply_coin(apply_coin(psi, CoinFamily::kGrover), CoinFamily::kGrover), psi));
      worst = std::max(worst, max_abs_diff(apply_move(apply_move(psi)), psi));
      worst = std::max(worst, max_abs_diff(apply_swap(apply_swap(psi)), psi));
      for (CzMode mode : {CzMode::kEdgeList, CzMode::kIncident})
        worst = std::max(worst, max_abs_diff(apply_cz(apply_cz(psi, mode), mode), psi));
    }
    o.check(worst < 1e-12, "N=" + std::to_string(g->n_nodes()) + " involutions " + fmt(worst));
  }
  return o;
}

Outcome ac3_cube_pattern(Context& ctx) {
  Outcome o;
  const std::set<int> even{0, 2, 5, 7};
  PureState psi = origin(ctx.cube);
  const Walk walk(ctx.cube, CoinFamily::kGrover, CzMode::kEdgeList);
  double worst = 0.0;
  for (int t = 0; t <= 40; ++t) {
    const auto p = position_distribution(psi);
    double off = 0.0;
    for (int x = 0; x < 8; ++x)
      if (even.count(x) != (t % 2 == 0 ? 1U : 0U)) off += p[x];
    worst = std::max(worst, off);
    walk.step_in_place(psi);
  }
  o.check(worst < 1e-10, "max off-set mass " + fmt(worst));
  return o;
}

Outcome ac4_position_entropy(Context& ctx) {
  Outcome o;
  for (const auto& [name, g] : {std::pair{"cube", ctx.cube}, std::pair{"moebius", ctx.moebius}}) {
    for (CoinFamily coin : {CoinFamily::kGrover, CoinFamily::kFourier})
      ctx.stationary.emplace_back(std::string(name) + "/" + std::string(to_string(coin)), run(g, coin, true));
  }
  const double cube = window_mean(ctx.stationary[0].second, &StepRecord::entropy_position);
  const double moebius = window_mean(ctx.stationary[2].second, &StepRecord::entropy_position);
  o.check(std::abs(cube - 2.0) <= 0.2, "cube S_x " + fmt(cube));
  o.check(std::abs(moebius - 3.0) <= 0.2, "moebius S_x " + fmt(moebius));
  return o;
}

Outcome ac5_coin_entropy(Context& ctx) {
  Outcome o;
  for (const auto& [name, tr] : ctx.stationary) {
    const double sc = window_mean(tr, &StepRecord::entropy_color);
    o.check(std::abs(sc - std::log2(3.0)) <= 0.1, name + " S_c " + fmt(sc));
  }
  return o;
}

Outcome ac6_spacings(Context& ctx) {
  Outcome o;
  auto timed = [&](const std::string& name, const std::shared_ptr<const Graph>& g, CoinFamily coin, bool vectors,
                   std::optional<SpectralData>& slot) {
    const auto start = Clock::now();
    const EvolutionOperator op = build_unitary(g, coin, CzMode::kEdgeList);
    DiagonalizeOptions opt;
    opt.eigenvectors = vectors;
    slot = diagonalize(op, opt);
    const double elapsed = seconds_since(start);
    const SpacingFit fit = fit_spacings(level_spacings(slot->quasienergies, true));
    o.check(elapsed < 1800.0, name + " dim " + std::to_string(op.dimension()) + " in " + fmt(elapsed) + " s");
    return fit;
  };
  const SpacingFit m = timed("moebius/grover", ctx.moebius, CoinFamily::kGrover, false, ctx.moebius_spectrum);
  o.check(m.wigner_closer(), "moebius KS W " + fmt(m.ks_wigner) + " < P " + fmt(m.ks_poisson));
  const SpacingFit r = timed("G(8,3)/fourier", ctx.random_graph, CoinFamily::kFourier, true, ctx.random_spectrum);
  o.check(r.wigner_closer(), "G(8,3) KS W " + fmt(r.ks_wigner) + " < P " + fmt(r.ks_poisson));
  ctx.chain = share(load_graph(QWALK_CHAIN_GRAPH));
  const SpacingFit c = timed("chain/grover", ctx.chain, CoinFamily::kGrover, false, ctx.chain_spectrum);
  o.check(!c.wigner_closer(), "chain KS P " + fmt(c.ks_poisson) + " < W " + fmt(c.ks_wigner) + " (" +
                                  std::to_string(ctx.chain_spectrum->class_count()) + " of " +
                                  std::to_string(ctx.chain_spectrum->size()) + " levels distinct)");
  return o;
}

Outcome ac7_thermalization(Context& ctx) {
  Outcome o;
  if (!ctx.random_spectrum) {
    o.check(false, "G(8,3) spectrum unavailable");
    return o;
  }
  ctx.random_trajectory = run(ctx.random_graph, CoinFamily::kFourier, false);
  const ThermalizationReport r =
      thermalization_report(*ctx.random_spectrum, *ctx.random_trajectory, origin(ctx.random_graph), kWindowStart,
                            kWindowEnd);
  o.check(r.time_vs_microcanonical.max_abs < 0.05, "max|p_time-p_M| " + fmt(r.time_vs_microcanonical.max_abs));
  o.check(r.eigenvector_vs_microcanonical.max_abs < 0.05,
          "max|p_eig-p_M| " + fmt(r.eigenvector_vs_microcanonical.max_abs) + " (mode " +
              std::to_string(r.typical_index) + ")");
  return o;
}

Outcome ac8_typical_eigenvector(Context& ctx) {
  Outcome o;
  if (!ctx.random_spectrum) {
    o.check(false, "G(8,3) spectrum unavailable");
    return o;
  }
  const std::size_t n = typical_eigenvector(*ctx.random_spectrum);
  const AmplitudeStatistics a =
      amplitude_statistics(ctx.random_spectrum->eigenvectors.col(static_cast<Eigen::Index>(n)), 20);
  o.check(a.ks_exponential_unit < 0.05, "KS(|v|^2 dim, Exp(1)) " + fmt(a.ks_exponential_unit));
  o.check(a.phase_max_relative_deviation <= 0.05,
          "phase max bin deviation " + fmt(a.phase_max_relative_deviation) + " over 20 bins");
  return o;
}

Outcome ac9_complete_graphs(Context&) {
  Outcome o;
  std::vector<double> s_bar;
  std::string values;
  for (int n = 4; n <= 8; ++n) {
    const Trajectory tr = run(share(complete_graph(n)), CoinFamily::kGrover, false);
    s_bar.push_back(time_average(tr.spin_series(), kWindowStart, kWindowEnd).overall);
    values += (values.empty() ? "" : " ") + ("K" + std::to_string(n) + "=" + fmt(s_bar.back()));
  }
  o.check(std::is_sorted(s_bar.begin(), s_bar.end()), "s_bar " + values);
  return o;
}

Outcome ac10_properties(Context& ctx) {
  Outcome o;
  // Padding exactness and entropy bounds along a trajectory.
  auto kite = share(kite_graph());
  PureState psi = origin(kite);
  const Walk walk(kite, CoinFamily::kFourier, CzMode::kIncident);
  double padding = 0.0;
  bool bounds = true;
  for (int t = 0; t < 60; ++t) {
    walk.step_in_place(psi);
    padding = std::max(padding, psi.padding_weight());
    const double sx = entanglement_entropy(psi, Part::kPosition);
    const double sc = entanglement_entropy(psi, Part::kColor);
    const double ss = entanglement_entropy(psi, Part::kSpin);
    bounds = bounds && sx > -1e-12 && sx <= 3.0 + 1e-9 && sc > -1e-12 && sc <= std::log2(5.0) + 1e-9 &&
             ss > -1e-12 && ss <= std::log2(40.0) + 1e-9;
    double total = 0.0;
    for (double p : position_distribution(psi)) total += p;
    bounds = bounds && std::abs(total - 1.0) < 1e-10;
  }
  o.check(padding == 0.0, "padding weight " + fmt(padding));
  o.check(bounds, "entropy bounds and sum p = 1 on kite");
  for (const auto& [name, tr] : ctx.stationary) {
    bool ok = true;
    for (const StepRecord& r : tr.records)
      ok = ok && r.entropy_position <= 3.0 + 1e-9 && r.entropy_color <= std::log2(3.0) + 1e-9 &&
           r.entropy_spin <= 8.0 + 1e-9 && r.entropy_spin >= -1e-12;
    o.check(ok, name + " entropy bounds");
  }

  // Pack/unpack bijection.
  bool bijective = true;
  for (const Graph& g : {bull_graph(), path_graph(6), complete_graph(4)}) {
    std::set<std::size_t> seen;
    for (int x = 0; x < g.n_nodes(); ++x)
      for (int c = 0; c < g.degree(x); ++c)
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << g.n_nodes()); ++s) {
          const PackedIndex i = basis_index(g, {x, c, s});
          bijective = bijective && unpack(g, i) == BasisKet{x, c, s};
          seen.insert(i.value);
        }
    bijective = bijective && seen.size() == packed_dimension(g);
  }
  o.check(bijective, "pack/unpack bijection");

  // Reduced matrices Hermitian with unit trace.
  std::mt19937_64 rng(10);
  double herm = 0.0;
  double trace = 0.0;
  const PureState r = random_state(share(bull_graph()), rng);
  for (Part part : {Part::kPosition, Part::kColor, Part::kSpin}) {
    const Eigen::MatrixXcd rho = reduced_density(r, part);
    herm = std::max(herm, (rho - rho.adjoint()).cwiseAbs().maxCoeff());
    trace = std::max(trace, std::abs(rho.trace().real() - 1.0));
  }
  o.check(herm < 1e-12 && trace < 1e-10, "reduced density hermitian " + fmt(herm) + ", trace " + fmt(trace));

  // Spectral invariants.
  double reconstruction = 0.0;
  for (const Graph& g : {bull_graph(), cycle_graph(5)}) {
    const EvolutionOperator op = build_unitary(share(g), CoinFamily::kGrover, CzMode::kEdgeList);
    reconstruction = std::max(reconstruction, reconstruction_error(diagonalize(op), op.dense()));
  }
  o.check(reconstruction < 1e-6, "eigen-reconstruction " + fmt(reconstruction));
  for (auto* sp : {&ctx.moebius_spectrum, &ctx.random_spectrum, &ctx.chain_spectrum}) {
    if (!*sp) continue;
    const auto s = level_spacings((*sp)->quasienergies, true);
    double mean = 0.0;
    for (double v : s) mean += v;
    mean /= static_cast<double>(s.size());
    const auto once = merge_degenerate((*sp)->quasienergies, kDegeneracyTolerance);
    const bool idempotent = merge_degenerate(once, kDegeneracyTolerance) == once;
    o.check(std::abs(mean - 1.0) < 1e-12 && idempotent,
            "N=" + std::to_string((*sp)->graph->n_nodes()) + " spacing mean-1 " + fmt(mean - 1.0) + ", filter idempotent");
  }
  if (ctx.random_spectrum) {
    const SpectralData& sp = *ctx.random_spectrum;
    const double bound = std::log2(static_cast<double>(sp.size()));
    const double top = *std::max_element(sp.shannon.begin(), sp.shannon.end());
    o.check(top <= bound + 1e-9, "max Shannon " + fmt(top) + " <= " + fmt(bound));
    o.check(sp.max_residual < 1e-6, "G(8,3) eigenpair residual " + fmt(sp.max_residual));
  }
  if (ctx.random_trajectory && ctx.random_spectrum) {
    const ThermalizationReport t = thermalization_report(*ctx.random_spectrum, *ctx.random_trajectory,
                                                         origin(ctx.random_graph), kWindowStart, kWindowEnd);
    const bool symmetric =
        distribution_distance(t.p_time, t.p_microcanonical).l1 == distribution_distance(t.p_microcanonical, t.p_time).l1;
    const bool triangle = t.eigenvector_vs_microcanonical.l1 <=
                          t.eigenvector_vs_time.l1 + t.time_vs_microcanonical.l1 + 1e-15;
    o.check(symmetric && triangle, "distance symmetry and triangle inequality");
  }
  return o;
}

}  // namespace

int main() {
  Context ctx;
  const std::vector<std::pair<std::string, std::function<Outcome(Context&)>>> criteria{
      {"unitarity and oracle equivalence", ac1_unitarity},
      {"coin identities and involutions", ac2_coins},
      {"cube bipartite pattern", ac3_cube_pattern},
      {"position entropy qubit count", ac4_position_entropy},
      {"coin entropy", ac5_coin_entropy},
      {"spacing statistics", ac6_spacings},
      {"thermalization", ac7_thermalization},
      {"typical eigenvector statistics", ac8_typical_eigenvector},
      {"complete graph magnetization trend", ac9_complete_graphs},
      {"property suite", ac10_properties},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome outcome;
    try {
      outcome = criteria[i].second(ctx);
    } catch (const std::exception& e) {
      outcome.check(false, std::string("exception: ") + e.what());
    }
    if (!outcome.pass) ++failures;
    std::string notes;
    for (const std::string& n : outcome.notes) notes += (notes.empty() ? "" : "; ") + n;
    std::printf("AC%-2zu %s  %s [%.1f s]: %s\n", i + 1, outcome.pass ? "PASS" : "FAIL", criteria[i].first.c_str(),
                seconds_since(start), notes.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
