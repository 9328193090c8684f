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

#include "qwalk/observables.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qwalk {
namespace {

constexpr double kEigenvalueFloor = 1e-12;

void check_window(const std::vector<std::vector<double>>& series, int t0, int t1, int min_length) {
  if (t0 < 0 || t1 >= static_cast<int>(series.size()) || t1 - t0 + 1 < min_length) {
    throw std::invalid_argument("window [" + std::to_string(t0) + ", " + std::to_string(t1) +
                                "] needs at least " + std::to_string(min_length) +
                                " steps inside the recorded range [0, " +
                                std::to_string(static_cast<int>(series.size()) - 1) + "]");
  }
}

}  // namespace

std::vector<double> position_distribution(const PureState& state) {
  std::vector<double> p(state.n_nodes(), 0.0);
  const std::size_t row = static_cast<std::size_t>(state.colors()) * state.spin_dim();
  auto amps = state.amplitudes();
  for (int x = 0; x < state.n_nodes(); ++x) {
    double sum = 0.0;
    for (std::size_t i = x * row; i < (x + 1) * row; ++i) sum += std::norm(amps[i]);
    p[x] = sum;
  }
  return p;
}

std::vector<double> magnetization(const PureState& state) {
  const int n = state.n_nodes();
  const std::size_t ns = state.spin_dim();
  std::vector<double> weight(ns, 0.0);
  auto amps = state.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) weight[i & (ns - 1)] += std::norm(amps[i]);

  std::vector<double> s(n, 0.0);
  for (std::uint64_t conf = 0; conf < ns; ++conf) {
    if (weight[conf] == 0.0) continue;
    for (int x = 0; x < n; ++x) s[x] += spin_bit(conf, x) ? -weight[conf] : weight[conf];
  }
  return s;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(rho, Eigen::EigenvaluesOnly);
  double entropy = 0.0;
  for (double lambda : solver.eigenvalues()) {
    if (lambda > kEigenvalueFloor) entropy -= lambda * std::log2(lambda);
  }
  return std::max(entropy, 0.0);
}

double entanglement_entropy(const PureState& state, Part part, const Guards& guards) {
  if (part != Part::kSpin) return von_neumann_entropy(reduced_density(state, part, guards));
  if (state.n_nodes() > guards.max_spin_density_nodes) {
    throw GuardError("refusing spin entropy for N = " + std::to_string(state.n_nodes()) +
                     " (guard: " + std::to_string(guards.max_spin_density_nodes) + ")");
  }
  const auto rows = static_cast<Eigen::Index>(state.n_nodes()) * state.colors();
  const auto cols = static_cast<Eigen::Index>(state.spin_dim());
  if (cols <= rows) return von_neumann_entropy(reduced_density(state, Part::kSpin, guards));
  // The {x, c} side has the same nonzero spectrum and is the smaller matrix.
  Eigen::Map<const Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>> m(
      state.amplitudes().data(), rows, cols);
  Eigen::MatrixXcd rho = m * m.adjoint();
  return von_neumann_entropy(0.5 * (rho + rho.adjoint()));
}

std::vector<std::vector<double>> Trajectory::position_series() const {
  std::vector<std::vector<double>> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.position);
  return out;
}

std::vector<std::vector<double>> Trajectory::spin_series() const {
  std::vector<std::vector<double>> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(r.spin);
  return out;
}

Trajectory evolve(const PureState& initial, CoinFamily coin, CzMode mode, const EvolveOptions& options,
                  PureState* final_state) {
  if (options.steps < 0) throw std::invalid_argument("steps must be >= 0");
  const bool spin_entropy = options.entropies && !(options.skip_guarded_spin_entropy &&
                                                   initial.n_nodes() > options.guards.max_spin_density_nodes);
  Walk walk(initial.graph_ptr(), coin, mode);
  Trajectory trajectory{initial.graph_ptr(), coin, mode, {}};
  trajectory.records.reserve(options.steps + 1);

  PureState state = initial;
  for (int t = 0;; ++t) {
    StepRecord rec;
    rec.t = t;
    rec.position = position_distribution(state);
    rec.spin = magnetization(state);
    if (options.entropies) {
      rec.entropy_position = entanglement_entropy(state, Part::kPosition, options.guards);
      rec.entropy_color = entanglement_entropy(state, Part::kColor, options.guards);
      rec.entropy_spin = spin_entropy ? entanglement_entropy(state, Part::kSpin, options.guards)
                                      : std::numeric_limits<double>::quiet_NaN();
    }
    trajectory.records.push_back(std::move(rec));
    if (t == options.steps) break;
    walk.step_in_place(state);
  }
  if (final_state) *final_state = std::move(state);
  return trajectory;
}

TimeAverage time_average(const std::vector<std::vector<double>>& series, int t0, int t1) {
  check_window(series, t0, t1, 1);
  const std::size_t n = series[t0].size();
  TimeAverage avg{std::vector<double>(n, 0.0), 0.0};
  for (int t = t0; t <= t1; ++t) {
    for (std::size_t x = 0; x < n; ++x) avg.per_node[x] += series[t][x];
  }
  const double count = t1 - t0 + 1;
  for (double& v : avg.per_node) {
    v /= count;
    avg.overall += v;
  }
  avg.overall /= static_cast<double>(n);
  return avg;
}

double snapshot_mean(const std::vector<std::vector<double>>& series, int t) {
  check_window(series, t, t, 1);
  double sum = 0.0;
  for (double v : series[t]) sum += v;
  return sum / static_cast<double>(series[t].size());
}

std::vector<double> spin_fluctuation(const std::vector<std::vector<double>>& series, int t0, int t1) {
  check_window(series, t0, t1, 2);
  const double mean = time_average(series, t0, t1).overall;
  const std::size_t n = series[t0].size();
  std::vector<double> delta(n, 0.0);
  for (int t = t0; t <= t1; ++t) {
    for (std::size_t x = 0; x < n; ++x) delta[x] += (series[t][x] - mean) * (series[t][x] - mean);
  }
  for (double& v : delta) v = std::sqrt(v / (t1 - t0 + 1));
  return delta;
}

void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out) {
  const int n = trajectory.graph ? trajectory.graph->n_nodes() : 0;
  out << "t";
  for (int x = 0; x < n; ++x) out << ",p" << x;
  for (int x = 0; x < n; ++x) out << ",s" << x;
  out << ",S_x,S_c,S_s\n";
  out << std::setprecision(17);
  for (const auto& r : trajectory.records) {
    out << r.t;
    for (double v : r.position) out << ',' << v;
    for (double v : r.spin) out << ',' << v;
    out << ',' << r.entropy_position << ',' << r.entropy_color << ',' << r.entropy_spin << '\n';
  }
}

}  // namespace qwalk
