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

#include <cstddef>
#include <iosfwd>
#include <memory>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "qwalk/graph.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/ops.hpp"
#include "qwalk/state.hpp"
#include "qwalk/stats.hpp"

namespace qwalk {

inline constexpr double kDegeneracyTolerance = 1e-8;

struct DiagonalizeOptions {
  bool eigenvectors = true;
  /// Input is rejected when max |U^dagger U - I| exceeds this.
  double unitarity_tolerance = 1e-8;
  /// Eigenpairs are rejected when |lambda| deviates from 1, or the residual
  /// |U v - lambda v| exceeds, this tolerance.
  double eigenpair_tolerance = 1e-6;
  double degeneracy_tolerance = kDegeneracyTolerance;
};

/// Spectrum of U: U|n> = exp(-i E_n)|n>, E_n in (-pi, pi] ascending.
struct SpectralData {
  std::shared_ptr<const Graph> graph;  // null for a bare matrix
  std::vector<double> quasienergies;
  /// Column n pairs with quasienergies[n]; orthonormal. Empty when the
  /// eigenvectors were not requested.
  Eigen::MatrixXcd eigenvectors;
  std::vector<double> shannon;  // per level, bits; empty without eigenvectors
  std::vector<int> degeneracy_class;
  /// Largest |U v_n - lambda_n v_n| seen during refinement (0 without vectors).
  double max_residual = 0.0;

  std::size_t size() const { return quasienergies.size(); }
  bool has_eigenvectors() const { return eigenvectors.cols() > 0; }
  int class_count() const { return degeneracy_class.empty() ? 0 : degeneracy_class.back() + 1; }
};

/// Exact diagonalization. The unitary is mapped to the Hermitian matrix
/// H = i (1 - e^{i theta} U)(1 + e^{i theta} U)^{-1}, which shares its
/// eigenvectors, and solved with LAPACK zheevr; eigenvalues are then
/// refined as Rayleigh quotients of U.
/// Throws std::invalid_argument for a non-unitary input.
SpectralData diagonalize(const EvolutionOperator& op, const DiagonalizeOptions& options = {});
SpectralData diagonalize(const Eigen::MatrixXcd& unitary, const DiagonalizeOptions& options = {});

/// max |U - V exp(-iE) V^dagger|. Needs eigenvectors.
double reconstruction_error(const SpectralData& spectral, const Eigen::MatrixXcd& unitary);

/// Wraps an angle into (-pi, pi].
double wrap_phase(double angle);

/// Class labels 0, 1, ... chaining sorted levels closer than `tolerance`.
std::vector<int> degeneracy_classes(std::span<const double> sorted_levels, double tolerance);

/// Sorted levels with each chain of levels closer than `tolerance` replaced
/// by its lowest member.
std::vector<double> merge_degenerate(std::span<const double> levels, double tolerance);

/// -sum |v_i|^2 log2 |v_i|^2. Throws std::invalid_argument for a zero or
/// non-normalized vector.
double shannon_entropy(const Eigen::Ref<const Eigen::VectorXcd>& v);

/// (E_{n+1} - E_n) / mean spacing over the sorted levels, no wrap-around.
/// Throws std::invalid_argument with fewer than three (distinct) levels.
std::vector<double> level_spacings(std::span<const double> quasienergies, bool filter_degeneracy,
                                   double tolerance = kDegeneracyTolerance);

// Unitary-ensemble Wigner surmise (32 s^2 / pi^2) exp(-4 s^2 / pi) and the
// Poisson law exp(-s). The pdfs throw std::invalid_argument for s < 0.
double wigner_surmise_pdf(double s);
double wigner_surmise_cdf(double s);
double poisson_pdf(double s);
double poisson_cdf(double s);

struct SpacingFit {
  std::size_t samples = 0;
  double ks_wigner = 0.0;
  double ks_poisson = 0.0;
  bool wigner_closer() const { return ks_wigner < ks_poisson; }
};

SpacingFit fit_spacings(std::span<const double> spacings);

/// Histogram of the quasienergies over [-pi, pi].
Histogram quasienergy_histogram(const SpectralData& spectral, int bins = 50);

/// d_x / sum_y d_y.
std::vector<double> microcanonical_distribution(const Graph& graph);

/// Index of the maximum-entropy eigenvector; ties go to the lowest index.
std::size_t typical_eigenvector(const SpectralData& spectral);

/// Per-node weight sum_{c,s} |v(xcs)|^2 of a packed vector.
std::vector<double> packed_position_distribution(const Graph& graph, const Eigen::Ref<const Eigen::VectorXcd>& v);
/// Per-node <sigma_z> of a packed vector.
std::vector<double> packed_magnetization(const Graph& graph, const Eigen::Ref<const Eigen::VectorXcd>& v);

struct DistributionDistance {
  double l1 = 0.0;
  double max_abs = 0.0;
};

DistributionDistance distribution_distance(std::span<const double> a, std::span<const double> b);

struct ThermalizationReport {
  std::size_t typical_index = 0;
  double typical_quasienergy = 0.0;
  double typical_entropy = 0.0;
  int t0 = 0;
  int t1 = 0;

  std::vector<double> p_eigenvector;
  std::vector<double> p_time;
  std::vector<double> p_microcanonical;
  DistributionDistance eigenvector_vs_time;
  DistributionDistance eigenvector_vs_microcanonical;
  DistributionDistance time_vs_microcanonical;

  std::vector<double> spin_eigenvector;
  std::vector<double> spin_time;
  double mean_spin_eigenvector = 0.0;
  double mean_spin_time = 0.0;
  double mean_spin_microcanonical = 0.0;

  /// |<n|psi(0)>|^2 for every level n, in spectral order.
  std::vector<double> initial_overlaps;

  /// All three pairwise max-abs distances below `tolerance`.
  bool consistent(double tolerance) const;
};

/// Compares the typical eigenvector, the time average of the trajectory over
/// [t0, t1], and the microcanonical distribution. Throws
/// std::invalid_argument when the inputs belong to different graphs or the
/// spectral data has no eigenvectors.
ThermalizationReport thermalization_report(const SpectralData& spectral, const Trajectory& trajectory,
                                           const PureState& initial, int t0, int t1);

struct EffectiveHamiltonian {
  Eigen::MatrixXcd matrix;
  /// Levels sit on both sides of the branch cut at +-pi within 1e-10, so the
  /// principal logarithm may split a degenerate class.
  bool branch_cut_warning = false;
};

/// H = sum_n E_n |n><n| = i log U on the principal branch.
EffectiveHamiltonian effective_hamiltonian(const SpectralData& spectral);

/// Graph of the basis kets linked by nonzero off-diagonal entries of U.
struct UNetwork {
  std::size_t n_vertices = 0;
  std::vector<Edge> edges;
  std::vector<int> degrees;

  std::vector<int> degree_set() const;
};

UNetwork u_network(const SparseMatrix& unitary, double threshold = 1e-12);
UNetwork u_network(const Eigen::MatrixXcd& unitary, double threshold = 1e-12);
/// DOT with vertices colored by degree class.
void write_unetwork_dot(const UNetwork& network, std::ostream& out);

/// Intensity and phase statistics of one eigenvector.
struct AmplitudeStatistics {
  std::vector<double> intensities;  // |v_i|^2 * dim
  std::vector<double> phases;       // arg v_i
  double fitted_rate = 0.0;         // maximum likelihood over positive intensities
  double ks_exponential_unit = 0.0; // against Exp(1)
  double ks_exponential_fitted = 0.0;
  Histogram phase_histogram;
  /// max_i |count_i / expected - 1| over the phase histogram bins.
  double phase_max_relative_deviation = 0.0;
};

AmplitudeStatistics amplitude_statistics(const Eigen::Ref<const Eigen::VectorXcd>& v, int phase_bins = 20);

/// CSV: n, E_n, S(n), degeneracy_class.
void write_levels_csv(const SpectralData& spectral, std::ostream& out);
/// CSV: n, s.
void write_spacings_csv(std::span<const double> spacings, std::ostream& out);
void write_thermalization_json(const ThermalizationReport& report, std::ostream& out);

}  // namespace qwalk
