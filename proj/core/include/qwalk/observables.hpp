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
#include <vector>

#include <Eigen/Dense>

#include "qwalk/errors.hpp"
#include "qwalk/ops.hpp"
#include "qwalk/state.hpp"

namespace qwalk {

/// p(x) = sum_{c,s} |psi_xcs|^2.
std::vector<double> position_distribution(const PureState& state);

/// <sigma_z(x)> with up = +1.
std::vector<double> magnetization(const PureState& state);

/// -sum lambda log2 lambda over the eigenvalues of a Hermitian matrix,
/// ignoring eigenvalues below 1e-12.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Entropy in bits of the reduced density matrix of `part`.
double entanglement_entropy(const PureState& state, Part part, const Guards& guards = {});

struct StepRecord {
  int t = 0;
  std::vector<double> position;
  std::vector<double> spin;
  double entropy_position = 0.0;
  double entropy_color = 0.0;
  double entropy_spin = 0.0;
};

struct Trajectory {
  std::shared_ptr<const Graph> graph;
  CoinFamily coin = CoinFamily::kGrover;
  CzMode cz_mode = CzMode::kEdgeList;
  std::vector<StepRecord> records;

  std::vector<std::vector<double>> position_series() const;
  std::vector<std::vector<double>> spin_series() const;
};

struct EvolveOptions {
  int steps = 0;
  bool entropies = true;
  /// Skip the spin entropy (leave it NaN) instead of raising GuardError
  /// when N is above the spin density guard.
  bool skip_guarded_spin_entropy = false;
  Guards guards;
};

/// Records t = 0 .. steps. The final state is written to `final_state` when
/// non-null.
Trajectory evolve(const PureState& initial, CoinFamily coin, CzMode mode, const EvolveOptions& options,
                  PureState* final_state = nullptr);

struct TimeAverage {
  std::vector<double> per_node;
  double overall = 0.0;
};

/// Mean over steps t0..t1 inclusive of series[t][x]; `overall` is the site
/// mean of the per-node averages. Throws std::invalid_argument when the
/// window is empty or outside the series.
TimeAverage time_average(const std::vector<std::vector<double>>& series, int t0, int t1);

/// Site mean of series[t] at one step.
double snapshot_mean(const std::vector<std::vector<double>>& series, int t);

/// sqrt(mean_t (s(x,t) - s_bar)^2) over t0..t1, s_bar the overall time/site
/// average. The window needs at least two steps.
std::vector<double> spin_fluctuation(const std::vector<std::vector<double>>& series, int t0, int t1);

/// CSV: t, p0..p{N-1}, s0..s{N-1}, S_x, S_c, S_s with 17 significant digits.
void write_trajectory_csv(const Trajectory& trajectory, std::ostream& out);

}  // namespace qwalk
