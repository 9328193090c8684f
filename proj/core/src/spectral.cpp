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

#include "qwalk/spectral.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <iomanip>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace qwalk {
namespace {

constexpr double kPi = std::numbers::pi;

// Rotations tried for the Cayley map; irrational multiples of pi so that the
// pole does not land on the degenerate peaks at 0 and +-pi.
constexpr std::array<double, 8> kRotations{0.9876543210, 2.2360679775, -1.7320508076, 0.3455751919,
                                           2.7182818285, -0.5772156649, 1.6180339887, -2.4142135624};
// Reject a rotation when 1 + e^{i theta} U is this close to singular.
constexpr double kMinReciprocalCondition = 1e-7;
// Levels this close to -pi are placed at +pi so that a class sitting on the
// cut is not split between the two ends of the band.
constexpr double kCutSnap = 1e-12;

double to_band(double angle) {
  const double e = wrap_phase(angle);
  return e <= -kPi + kCutSnap ? e + 2.0 * kPi : e;
}

using BuildCayley = std::function<void(Complex rotation, Eigen::MatrixXcd& plus, Eigen::MatrixXcd& minus)>;
using ApplyUnitary = std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>;

double one_norm(const Eigen::MatrixXcd& m) { return m.cwiseAbs().colwise().sum().maxCoeff(); }

void make_hermitian(Eigen::MatrixXcd& h) {
  const Eigen::Index n = h.rows();
  for (Eigen::Index j = 0; j < n; ++j) {
    for (Eigen::Index i = 0; i < j; ++i) {
      const Complex a = 0.5 * (h(i, j) + std::conj(h(j, i)));
      h(i, j) = a;
      h(j, i) = std::conj(a);
    }
    h(j, j) = h(j, j).real();
  }
}

// In-place column permutation: column k of the result is column order[k].
void permute_columns(Eigen::MatrixXcd& m, const std::vector<std::size_t>& order) {
  std::vector<char> done(order.size(), 0);
  Eigen::VectorXcd tmp;
  for (std::size_t start = 0; start < order.size(); ++start) {
    if (done[start] || order[start] == start) continue;
    tmp = m.col(static_cast<Eigen::Index>(start));
    std::size_t k = start;
    while (true) {
      done[k] = 1;
      const std::size_t src = order[k];
      if (src == start) {
        m.col(static_cast<Eigen::Index>(k)) = tmp;
        break;
      }
      m.col(static_cast<Eigen::Index>(k)) = m.col(static_cast<Eigen::Index>(src));
      k = src;
    }
  }
}

SpectralData solve(Eigen::Index n, const BuildCayley& build, const ApplyUnitary& apply,
                   const DiagonalizeOptions& options) {
  SpectralData out;
  if (n == 0) return out;

  Eigen::MatrixXcd plus;
  Eigen::MatrixXcd minus;
  double theta = 0.0;
  bool solved = false;
  std::vector<lapack_int> pivots(static_cast<std::size_t>(n));
  for (double rotation : kRotations) {
    build(std::polar(1.0, rotation), plus, minus);
    const double anorm = one_norm(plus);
    lapack_int info = LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, plus.data(), n, pivots.data());
    if (info > 0) continue;
    if (info < 0) throw std::runtime_error("zgetrf: invalid argument " + std::to_string(-info));
    double rcond = 0.0;
    info = LAPACKE_zgecon(LAPACK_COL_MAJOR, '1', n, plus.data(), n, anorm, &rcond);
    if (info != 0) throw std::runtime_error("zgecon failed with code " + std::to_string(info));
    if (rcond < kMinReciprocalCondition) continue;
    info = LAPACKE_zgetrs(LAPACK_COL_MAJOR, 'N', n, n, plus.data(), n, pivots.data(), minus.data(), n);
    if (info != 0) throw std::runtime_error("zgetrs failed with code " + std::to_string(info));
    theta = rotation;
    solved = true;
    break;
  }
  if (!solved) throw std::runtime_error("no well-conditioned Cayley rotation found");
  plus.resize(0, 0);

  Eigen::MatrixXcd& h = minus;
  h *= Complex{0.0, 1.0};
  make_hermitian(h);

  const char jobz = options.eigenvectors ? 'V' : 'N';
  std::vector<double> values(static_cast<std::size_t>(n));
  Eigen::MatrixXcd vectors = options.eigenvectors ? Eigen::MatrixXcd(n, n) : Eigen::MatrixXcd(1, 1);
  std::vector<lapack_int> support(2 * static_cast<std::size_t>(n));
  lapack_int found = 0;
  lapack_int info = LAPACKE_zheevr(LAPACK_COL_MAJOR, jobz, 'A', 'U', n, h.data(), n, 0.0, 0.0, 0, 0, 0.0,
                                   &found, values.data(), vectors.data(), options.eigenvectors ? n : 1,
                                   support.data());
  if (info != 0 || found != n) throw std::runtime_error("zheevr failed with code " + std::to_string(info));
  h.resize(0, 0);

  // h = -tan((E - theta) / 2).
  std::vector<double> energies(static_cast<std::size_t>(n));
  for (Eigen::Index k = 0; k < n; ++k) energies[k] = to_band(-2.0 * std::atan(values[k]) + theta);

  if (options.eigenvectors) {
    for (Eigen::Index k = 0; k < n; ++k) {
      const Eigen::VectorXcd v = vectors.col(k);
      const Eigen::VectorXcd uv = apply(v);
      const Complex lambda = v.dot(uv);
      const double residual = (uv - lambda * v).norm();
      if (std::abs(std::abs(lambda) - 1.0) > options.eigenpair_tolerance ||
          residual > options.eigenpair_tolerance) {
        throw std::invalid_argument("eigenpair " + std::to_string(k) + " has |lambda| = " +
                                    std::to_string(std::abs(lambda)) + " and residual " +
                                    std::to_string(residual) + "; the input is not unitary");
      }
      out.max_residual = std::max(out.max_residual, residual);
      energies[k] = to_band(-std::arg(lambda));
    }
  }

  std::vector<std::size_t> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return energies[a] < energies[b]; });
  out.quasienergies.resize(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) out.quasienergies[k] = energies[order[k]];

  if (options.eigenvectors) {
    permute_columns(vectors, order);
    out.eigenvectors = std::move(vectors);
    out.shannon.resize(order.size());
    for (Eigen::Index k = 0; k < n; ++k) out.shannon[k] = shannon_entropy(out.eigenvectors.col(k));
  }
  out.degeneracy_class = degeneracy_classes(out.quasienergies, options.degeneracy_tolerance);
  return out;
}

}  // namespace

double wrap_phase(double angle) {
  double a = std::remainder(angle, 2.0 * kPi);
  if (a <= -kPi) a += 2.0 * kPi;
  return a;
}

SpectralData diagonalize(const EvolutionOperator& op, const DiagonalizeOptions& options) {
  const double error = op.unitarity_error();
  if (error > options.unitarity_tolerance) {
    throw std::invalid_argument("operator is not unitary: max |U^dagger U - I| = " + std::to_string(error));
  }
  const SparseMatrix& u = op.matrix();
  const Eigen::Index n = op.dimension();
  auto build = [&](Complex rotation, Eigen::MatrixXcd& plus, Eigen::MatrixXcd& minus) {
    plus = Eigen::MatrixXcd::Identity(n, n);
    minus = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index k = 0; k < u.outerSize(); ++k) {
      for (SparseMatrix::InnerIterator it(u, k); it; ++it) {
        const Complex value = rotation * it.value();
        plus(it.row(), it.col()) += value;
        minus(it.row(), it.col()) -= value;
      }
    }
  };
  auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return u * v; };
  SpectralData out = solve(n, build, apply, options);
  out.graph = op.graph_ptr();
  return out;
}

SpectralData diagonalize(const Eigen::MatrixXcd& unitary, const DiagonalizeOptions& options) {
  if (unitary.rows() != unitary.cols()) throw std::invalid_argument("diagonalize needs a square matrix");
  const Eigen::Index n = unitary.rows();
  const double error =
      n == 0 ? 0.0
             : (unitary.adjoint() * unitary - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (error > options.unitarity_tolerance) {
    throw std::invalid_argument("matrix is not unitary: max |U^dagger U - I| = " + std::to_string(error));
  }
  auto build = [&](Complex rotation, Eigen::MatrixXcd& plus, Eigen::MatrixXcd& minus) {
    plus = Eigen::MatrixXcd::Identity(n, n) + rotation * unitary;
    minus = Eigen::MatrixXcd::Identity(n, n) - rotation * unitary;
  };
  auto apply = [&](const Eigen::VectorXcd& v) -> Eigen::VectorXcd { return unitary * v; };
  return solve(n, build, apply, options);
}

double reconstruction_error(const SpectralData& spectral, const Eigen::MatrixXcd& unitary) {
  if (!spectral.has_eigenvectors()) throw std::invalid_argument("reconstruction needs eigenvectors");
  Eigen::VectorXcd phases(static_cast<Eigen::Index>(spectral.size()));
  for (std::size_t k = 0; k < spectral.size(); ++k) phases[k] = std::polar(1.0, -spectral.quasienergies[k]);
  const Eigen::MatrixXcd& v = spectral.eigenvectors;
  return (v * phases.asDiagonal() * v.adjoint() - unitary).cwiseAbs().maxCoeff();
}

std::vector<int> degeneracy_classes(std::span<const double> sorted_levels, double tolerance) {
  std::vector<int> classes(sorted_levels.size(), 0);
  for (std::size_t k = 1; k < sorted_levels.size(); ++k) {
    classes[k] = classes[k - 1] + (sorted_levels[k] - sorted_levels[k - 1] > tolerance ? 1 : 0);
  }
  return classes;
}

std::vector<double> merge_degenerate(std::span<const double> levels, double tolerance) {
  std::vector<double> sorted(levels.begin(), levels.end());
  std::sort(sorted.begin(), sorted.end());
  std::vector<double> merged;
  for (std::size_t k = 0; k < sorted.size(); ++k) {
    if (k == 0 || sorted[k] - sorted[k - 1] > tolerance) merged.push_back(sorted[k]);
  }
  return merged;
}

double shannon_entropy(const Eigen::Ref<const Eigen::VectorXcd>& v) {
  const double norm2 = v.squaredNorm();
  if (norm2 == 0.0) throw std::invalid_argument("Shannon entropy of a zero vector");
  if (std::abs(norm2 - 1.0) > 1e-8) {
    throw std::invalid_argument("Shannon entropy needs a unit vector, |v|^2 = " + std::to_string(norm2));
  }
  double entropy = 0.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double p = std::norm(v[i]);
    if (p > 0.0) entropy -= p * std::log2(p);
  }
  return entropy;
}

std::vector<double> level_spacings(std::span<const double> quasienergies, bool filter_degeneracy,
                                   double tolerance) {
  std::vector<double> levels = filter_degeneracy ? merge_degenerate(quasienergies, tolerance)
                                                 : std::vector<double>(quasienergies.begin(), quasienergies.end());
  std::sort(levels.begin(), levels.end());
  if (levels.size() < 3) {
    throw std::invalid_argument("spacing statistics need at least 3 levels, got " + std::to_string(levels.size()));
  }
  const double mean = (levels.back() - levels.front()) / static_cast<double>(levels.size() - 1);
  if (!(mean > 0.0)) throw std::invalid_argument("all levels coincide; mean spacing is zero");
  std::vector<double> spacings(levels.size() - 1);
  for (std::size_t k = 0; k + 1 < levels.size(); ++k) spacings[k] = (levels[k + 1] - levels[k]) / mean;
  return spacings;
}

double wigner_surmise_pdf(double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be >= 0");
  return 32.0 * s * s / (kPi * kPi) * std::exp(-4.0 * s * s / kPi);
}

double wigner_surmise_cdf(double s) {
  if (s <= 0.0) return 0.0;
  return std::erf(2.0 * s / std::sqrt(kPi)) - 4.0 * s / kPi * std::exp(-4.0 * s * s / kPi);
}

double poisson_pdf(double s) {
  if (s < 0.0) throw std::invalid_argument("spacing must be >= 0");
  return std::exp(-s);
}

double poisson_cdf(double s) { return s <= 0.0 ? 0.0 : 1.0 - std::exp(-s); }

SpacingFit fit_spacings(std::span<const double> spacings) {
  return {spacings.size(), ks_distance(spacings, wigner_surmise_cdf), ks_distance(spacings, poisson_cdf)};
}

Histogram quasienergy_histogram(const SpectralData& spectral, int bins) {
  return histogram(spectral.quasienergies, bins, -kPi, kPi);
}

std::vector<double> microcanonical_distribution(const Graph& graph) {
  std::vector<double> p(graph.n_nodes());
  for (int x = 0; x < graph.n_nodes(); ++x) p[x] = static_cast<double>(graph.degree(x)) / graph.degree_sum();
  return p;
}

std::size_t typical_eigenvector(const SpectralData& spectral) {
  if (spectral.shannon.empty()) throw std::invalid_argument("typical eigenvector needs eigenvectors");
  return static_cast<std::size_t>(std::max_element(spectral.shannon.begin(), spectral.shannon.end()) -
                                  spectral.shannon.begin());
}

std::vector<double> packed_position_distribution(const Graph& graph, const Eigen::Ref<const Eigen::VectorXcd>& v) {
  if (static_cast<std::size_t>(v.size()) != packed_dimension(graph)) {
    throw std::invalid_argument("vector does not match the packed dimension of the graph");
  }
  const std::size_t ns = std::size_t{1} << graph.n_nodes();
  std::vector<double> p(graph.n_nodes(), 0.0);
  for (int x = 0; x < graph.n_nodes(); ++x) {
    const std::size_t begin = static_cast<std::size_t>(graph.offset(x)) * ns;
    const std::size_t end = begin + static_cast<std::size_t>(graph.degree(x)) * ns;
    for (std::size_t i = begin; i < end; ++i) p[x] += std::norm(v[static_cast<Eigen::Index>(i)]);
  }
  return p;
}

std::vector<double> packed_magnetization(const Graph& graph, const Eigen::Ref<const Eigen::VectorXcd>& v) {
  if (static_cast<std::size_t>(v.size()) != packed_dimension(graph)) {
    throw std::invalid_argument("vector does not match the packed dimension of the graph");
  }
  const std::size_t ns = std::size_t{1} << graph.n_nodes();
  std::vector<double> weight(ns, 0.0);
  for (Eigen::Index i = 0; i < v.size(); ++i) weight[static_cast<std::size_t>(i) & (ns - 1)] += std::norm(v[i]);
  std::vector<double> s(graph.n_nodes(), 0.0);
  for (std::uint64_t conf = 0; conf < ns; ++conf) {
    for (int x = 0; x < graph.n_nodes(); ++x) s[x] += spin_bit(conf, x) ? -weight[conf] : weight[conf];
  }
  return s;
}

DistributionDistance distribution_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("distributions have different lengths");
  DistributionDistance d;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double diff = std::abs(a[i] - b[i]);
    d.l1 += diff;
    d.max_abs = std::max(d.max_abs, diff);
  }
  return d;
}

bool ThermalizationReport::consistent(double tolerance) const {
  return eigenvector_vs_time.max_abs < tolerance && eigenvector_vs_microcanonical.max_abs < tolerance &&
         time_vs_microcanonical.max_abs < tolerance;
}

ThermalizationReport thermalization_report(const SpectralData& spectral, const Trajectory& trajectory,
                                           const PureState& initial, int t0, int t1) {
  if (!spectral.graph || !trajectory.graph) {
    throw std::invalid_argument("thermalization report needs graph-backed spectral data and trajectory");
  }
  const Graph& graph = *spectral.graph;
  if (!(graph == *trajectory.graph) || !(graph == initial.graph())) {
    throw std::invalid_argument("spectral data, trajectory and initial state belong to different graphs");
  }
  if (!spectral.has_eigenvectors()) throw std::invalid_argument("thermalization report needs eigenvectors");

  ThermalizationReport r;
  r.t0 = t0;
  r.t1 = t1;
  r.typical_index = typical_eigenvector(spectral);
  r.typical_quasienergy = spectral.quasienergies[r.typical_index];
  r.typical_entropy = spectral.shannon[r.typical_index];
  const auto typical = spectral.eigenvectors.col(static_cast<Eigen::Index>(r.typical_index));

  r.p_eigenvector = packed_position_distribution(graph, typical);
  r.p_time = time_average(trajectory.position_series(), t0, t1).per_node;
  r.p_microcanonical = microcanonical_distribution(graph);
  r.eigenvector_vs_time = distribution_distance(r.p_eigenvector, r.p_time);
  r.eigenvector_vs_microcanonical = distribution_distance(r.p_eigenvector, r.p_microcanonical);
  r.time_vs_microcanonical = distribution_distance(r.p_time, r.p_microcanonical);

  r.spin_eigenvector = packed_magnetization(graph, typical);
  const TimeAverage spin = time_average(trajectory.spin_series(), t0, t1);
  r.spin_time = spin.per_node;
  r.mean_spin_time = spin.overall;
  r.mean_spin_eigenvector =
      std::accumulate(r.spin_eigenvector.begin(), r.spin_eigenvector.end(), 0.0) / graph.n_nodes();
  // Every spin configuration is equally weighted in the microcanonical state.
  r.mean_spin_microcanonical = 0.0;

  const Eigen::VectorXcd psi0 = to_packed(initial);
  const Eigen::VectorXcd overlaps = spectral.eigenvectors.adjoint() * psi0;
  r.initial_overlaps.resize(static_cast<std::size_t>(overlaps.size()));
  for (Eigen::Index k = 0; k < overlaps.size(); ++k) r.initial_overlaps[k] = std::norm(overlaps[k]);
  return r;
}

EffectiveHamiltonian effective_hamiltonian(const SpectralData& spectral) {
  if (!spectral.has_eigenvectors()) throw std::invalid_argument("effective Hamiltonian needs eigenvectors");
  EffectiveHamiltonian out;
  Eigen::VectorXd energies = Eigen::Map<const Eigen::VectorXd>(spectral.quasienergies.data(),
                                                               static_cast<Eigen::Index>(spectral.size()));
  const Eigen::MatrixXcd& v = spectral.eigenvectors;
  out.matrix = v * energies.cast<Complex>().asDiagonal() * v.adjoint();
  out.matrix = 0.5 * (out.matrix + out.matrix.adjoint()).eval();
  constexpr double kCut = 1e-10;
  const bool near_plus = std::any_of(spectral.quasienergies.begin(), spectral.quasienergies.end(),
                                     [](double e) { return e > kPi - kCut; });
  const bool near_minus = std::any_of(spectral.quasienergies.begin(), spectral.quasienergies.end(),
                                      [](double e) { return e < -kPi + kCut; });
  out.branch_cut_warning = near_plus && near_minus;
  return out;
}

std::vector<int> UNetwork::degree_set() const {
  std::vector<int> set(degrees.begin(), degrees.end());
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
  return set;
}

namespace {

UNetwork finish_network(std::size_t n, std::vector<Edge> edges) {
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  UNetwork net;
  net.n_vertices = n;
  net.degrees.assign(n, 0);
  for (const Edge& e : edges) {
    ++net.degrees[e.first];
    ++net.degrees[e.second];
  }
  net.edges = std::move(edges);
  return net;
}

}  // namespace

UNetwork u_network(const SparseMatrix& unitary, double threshold) {
  std::vector<Edge> edges;
  for (Eigen::Index k = 0; k < unitary.outerSize(); ++k) {
    for (SparseMatrix::InnerIterator it(unitary, k); it; ++it) {
      const int i = static_cast<int>(it.row());
      const int j = static_cast<int>(it.col());
      if (i != j && std::abs(it.value()) > threshold) edges.push_back({std::min(i, j), std::max(i, j)});
    }
  }
  return finish_network(static_cast<std::size_t>(unitary.rows()), std::move(edges));
}

UNetwork u_network(const Eigen::MatrixXcd& unitary, double threshold) {
  std::vector<Edge> edges;
  for (Eigen::Index j = 0; j < unitary.cols(); ++j) {
    for (Eigen::Index i = 0; i < unitary.rows(); ++i) {
      if (i != j && std::abs(unitary(i, j)) > threshold) {
        edges.push_back({static_cast<int>(std::min(i, j)), static_cast<int>(std::max(i, j))});
      }
    }
  }
  return finish_network(static_cast<std::size_t>(unitary.rows()), std::move(edges));
}

void write_unetwork_dot(const UNetwork& network, std::ostream& out) {
  static constexpr std::array<const char*, 10> kPalette{"black", "red",   "blue",    "green",  "yellow",
                                                         "cyan",  "magenta", "orange", "purple", "gray"};
  const std::vector<int> classes = network.degree_set();
  out << "graph U {\n  node [shape=point];\n";
  for (std::size_t i = 0; i < network.n_vertices; ++i) {
    const auto rank = std::lower_bound(classes.begin(), classes.end(), network.degrees[i]) - classes.begin();
    out << "  " << i << " [color=" << kPalette[static_cast<std::size_t>(rank) % kPalette.size()]
        << ", degree=" << network.degrees[i] << "];\n";
  }
  for (const Edge& e : network.edges) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
}

AmplitudeStatistics amplitude_statistics(const Eigen::Ref<const Eigen::VectorXcd>& v, int phase_bins) {
  if (v.size() == 0) throw std::invalid_argument("amplitude statistics of an empty vector");
  AmplitudeStatistics a;
  const double dim = static_cast<double>(v.size());
  std::vector<double> positive;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double intensity = std::norm(v[i]) * dim;
    a.intensities.push_back(intensity);
    a.phases.push_back(std::arg(v[i]));
    if (intensity > 0.0) positive.push_back(intensity);
  }
  a.fitted_rate = positive.empty() ? 0.0 : exponential_mle(positive);
  a.ks_exponential_unit = ks_distance(a.intensities, [](double x) { return exponential_cdf(x, 1.0); });
  const double rate = a.fitted_rate;
  a.ks_exponential_fitted = ks_distance(a.intensities, [rate](double x) { return exponential_cdf(x, rate); });
  a.phase_histogram = histogram(a.phases, phase_bins, -kPi, kPi);
  const double expected = dim / phase_bins;
  for (std::size_t count : a.phase_histogram.counts) {
    a.phase_max_relative_deviation =
        std::max(a.phase_max_relative_deviation, std::abs(static_cast<double>(count) / expected - 1.0));
  }
  return a;
}

void write_levels_csv(const SpectralData& spectral, std::ostream& out) {
  out << "n,E_n,S,degeneracy_class\n" << std::setprecision(17);
  for (std::size_t k = 0; k < spectral.size(); ++k) {
    out << k << ',' << spectral.quasienergies[k] << ',';
    if (!spectral.shannon.empty()) out << spectral.shannon[k];
    out << ',' << spectral.degeneracy_class[k] << '\n';
  }
}

void write_spacings_csv(std::span<const double> spacings, std::ostream& out) {
  out << "n,s\n" << std::setprecision(17);
  for (std::size_t k = 0; k < spacings.size(); ++k) out << k << ',' << spacings[k] << '\n';
}

void write_thermalization_json(const ThermalizationReport& r, std::ostream& out) {
  auto distance = [](const DistributionDistance& d) { return nlohmann::json{{"l1", d.l1}, {"max_abs", d.max_abs}}; };
  nlohmann::json j = {
      {"typical", {{"index", r.typical_index}, {"quasienergy", r.typical_quasienergy}, {"shannon", r.typical_entropy}}},
      {"window", {r.t0, r.t1}},
      {"position",
       {{"eigenvector", r.p_eigenvector},
        {"time", r.p_time},
        {"microcanonical", r.p_microcanonical},
        {"eigenvector_vs_time", distance(r.eigenvector_vs_time)},
        {"eigenvector_vs_microcanonical", distance(r.eigenvector_vs_microcanonical)},
        {"time_vs_microcanonical", distance(r.time_vs_microcanonical)}}},
      {"spin",
       {{"eigenvector", r.spin_eigenvector},
        {"time", r.spin_time},
        {"mean_eigenvector", r.mean_spin_eigenvector},
        {"mean_time", r.mean_spin_time},
        {"mean_microcanonical", r.mean_spin_microcanonical}}},
      {"initial_overlaps", r.initial_overlaps},
  };
  out << j.dump(2) << '\n';
}

}  // namespace qwalk
