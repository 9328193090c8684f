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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <memory>
#include <string>
#include <vector>

#include "qwalk/cli/cli.hpp"
#include "qwalk/observables.hpp"
#include "qwalk/spectral.hpp"

namespace qwalk::cli {
namespace {

namespace fs = std::filesystem;
using ordered_json = nlohmann::ordered_json;

// Files written by one command; removed again unless commit() is reached.
class OutputSet {
 public:
  explicit OutputSet(const std::string& dir) : dir_(dir) {
    std::error_code ec;
    if (fs::exists(dir_, ec)) {
      if (!fs::is_directory(dir_, ec)) throw ConfigError("output path " + dir + " is not a directory");
    } else {
      fs::create_directories(dir_, ec);
      if (ec) throw ConfigError("cannot create output directory " + dir + ": " + ec.message());
      created_dir_ = true;
    }
  }
  OutputSet(const OutputSet&) = delete;
  OutputSet& operator=(const OutputSet&) = delete;

  ~OutputSet() {
    if (committed_) return;
    std::error_code ec;
    for (const fs::path& p : written_) fs::remove(p, ec);
    if (created_dir_ && fs::is_empty(dir_, ec)) fs::remove(dir_, ec);
  }

  void write(const std::string& name, const std::function<void(std::ostream&)>& body,
             std::ios::openmode mode = std::ios::out) {
    const fs::path path = dir_ / name;
    written_.push_back(path);
    std::ofstream out(path, mode | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    body(out);
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + path.string());
  }

  void commit() { committed_ = true; }

 private:
  fs::path dir_;
  std::vector<fs::path> written_;
  bool created_dir_ = false;
  bool committed_ = false;
};

void write_config(OutputSet& out, const ExperimentConfig& config) {
  out.write("config.json", [&](std::ostream& os) { os << config_to_json(config).dump(2) << '\n'; });
}

void write_json(OutputSet& out, const std::string& name, const ordered_json& j) {
  out.write(name, [&](std::ostream& os) { os << std::setprecision(17) << j.dump(2) << '\n'; });
}

ordered_json graph_summary(const Graph& g) {
  ordered_json edges = ordered_json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return {{"n_nodes", g.n_nodes()}, {"degrees", g.degrees()}, {"edges", edges}};
}

PureState make_initial(const std::shared_ptr<const Graph>& graph, const ExperimentConfig& config) {
  PureState probe(graph, config.guards);  // raises GuardError before the ket check
  try {
    return initial_state(graph, config.initial, config.guards);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("initial state: ") + e.what());
  }
}

ordered_json fit_json(const SpacingFit& fit) {
  return {{"samples", fit.samples},
          {"ks_wigner", fit.ks_wigner},
          {"ks_poisson", fit.ks_poisson},
          {"wigner_closer", fit.wigner_closer()}};
}

}  // namespace

void run_graph(const ExperimentConfig& config, std::ostream& log) {
  validate(config);
  const Graph graph = resolve_graph(config);
  OutputSet out(config.out);
  write_config(out, config);
  out.write("graph.txt", [&](std::ostream& os) { write_edge_list(graph, os); });
  out.write("graph.dot", [&](std::ostream& os) { write_dot(graph, os); });
  out.commit();
  log << "graph: " << graph.n_nodes() << " nodes, " << graph.edges().size() << " edges -> " << config.out << '\n';
}

void run_evolve(const ExperimentConfig& config, std::ostream& log) {
  validate(config);
  auto graph = std::make_shared<const Graph>(resolve_graph(config));
  const PureState psi0 = make_initial(graph, config);

  EvolveOptions options;
  options.steps = config.steps;
  options.guards = config.guards;
  options.skip_guarded_spin_entropy = true;
  if (graph->n_nodes() > config.guards.max_spin_density_nodes) {
    log << "warning: N = " << graph->n_nodes() << " is above the spin density guard; S_s is not computed\n";
  }

  OutputSet out(config.out);
  write_config(out, config);
  PureState final_state(graph, config.guards);
  const Trajectory trajectory = evolve(psi0, config.coin, config.cz_mode, options, &final_state);
  out.write("trajectory.csv", [&](std::ostream& os) { write_trajectory_csv(trajectory, os); });

  const int t0 = config.window_start();
  const int t1 = config.window_end();
  const auto spins = trajectory.spin_series();
  const TimeAverage s_avg = time_average(spins, t0, t1);
  const TimeAverage p_avg = time_average(trajectory.position_series(), t0, t1);
  std::vector<std::vector<double>> entropies;
  for (const StepRecord& r : trajectory.records) {
    entropies.push_back({r.entropy_position, r.entropy_color, r.entropy_spin});
  }
  const TimeAverage e_avg = time_average(entropies, t0, t1);
  const StepRecord& last = trajectory.records.back();

  ordered_json summary;
  summary["graph"] = graph_summary(*graph);
  summary["coin"] = std::string(to_string(config.coin));
  summary["cz_mode"] = std::string(to_string(config.cz_mode));
  summary["steps"] = config.steps;
  summary["window"] = {t0, t1};
  summary["packed_dimension"] = packed_dimension(*graph);
  summary["s_bar"] = s_avg.overall;
  summary["s_bar_per_node"] = s_avg.per_node;
  summary["s_snapshot"] = snapshot_mean(spins, config.steps);
  summary["delta_s"] = t1 > t0 ? ordered_json(spin_fluctuation(spins, t0, t1)) : ordered_json(nullptr);
  summary["p_time"] = p_avg.per_node;
  summary["entropy_time_average"] = {
      {"S_x", e_avg.per_node[0]}, {"S_c", e_avg.per_node[1]}, {"S_s", e_avg.per_node[2]}};
  summary["final"] = {{"S_x", last.entropy_position},
                      {"S_c", last.entropy_color},
                      {"S_s", last.entropy_spin},
                      {"norm", std::sqrt(final_state.norm_squared())}};
  write_json(out, "summary.json", summary);
  out.commit();
  log << "evolve: " << config.steps << " steps, s_bar = " << s_avg.overall << ", S_x = " << e_avg.per_node[0]
      << " -> " << config.out << '\n';
}

void run_spectrum(const ExperimentConfig& config, std::ostream& log) {
  validate(config);
  auto graph = std::make_shared<const Graph>(resolve_graph(config));
  const PureState psi0 = make_initial(graph, config);
  const EvolutionOperator op = build_unitary(graph, config.coin, config.cz_mode, config.guards);
  log << "spectrum: dimension " << op.dimension() << ", diagonalizing\n";

  OutputSet out(config.out);
  write_config(out, config);

  DiagonalizeOptions dopt;
  dopt.eigenvectors = config.spectrum.eigenvectors;
  const SpectralData sp = diagonalize(op, dopt);
  out.write("levels.csv", [&](std::ostream& os) { write_levels_csv(sp, os); });
  out.write("quasienergy_histogram.csv",
            [&](std::ostream& os) { write_histogram_csv(quasienergy_histogram(sp, config.spectrum.histogram_bins), os); });

  ordered_json report;
  report["graph"] = graph_summary(*graph);
  report["coin"] = std::string(to_string(config.coin));
  report["cz_mode"] = std::string(to_string(config.cz_mode));
  report["dimension"] = op.dimension();
  report["unitarity_error"] = op.unitarity_error();
  report["degeneracy_classes"] = sp.class_count();
  report["max_residual"] = sp.max_residual;

  const auto spacings = level_spacings(sp.quasienergies, config.spectrum.filter_degeneracy);
  out.write("spacings.csv", [&](std::ostream& os) { write_spacings_csv(spacings, os); });
  out.write("spacing_histogram.csv", [&](std::ostream& os) {
    write_histogram_csv(histogram(spacings, config.spectrum.spacing_bins, 0.0, config.spectrum.spacing_max), os);
  });
  ordered_json spacing = fit_json(fit_spacings(spacings));
  spacing["filtered"] = config.spectrum.filter_degeneracy;
  report["spacing"] = spacing;
  try {
    report["spacing_unfiltered"] = fit_json(fit_spacings(level_spacings(sp.quasienergies, false)));
  } catch (const std::invalid_argument&) {
    report["spacing_unfiltered"] = nullptr;
  }

  if (sp.has_eigenvectors()) {
    EvolveOptions eopt;
    eopt.steps = config.steps;
    eopt.entropies = false;
    eopt.guards = config.guards;
    const Trajectory trajectory = evolve(psi0, config.coin, config.cz_mode, eopt);
    const ThermalizationReport th =
        thermalization_report(sp, trajectory, psi0, config.window_start(), config.window_end());
    out.write("thermalization.json", [&](std::ostream& os) { write_thermalization_json(th, os); });
    const AmplitudeStatistics amp = amplitude_statistics(sp.eigenvectors.col(static_cast<Eigen::Index>(th.typical_index)));
    report["typical_eigenvector"] = {{"index", th.typical_index},
                                     {"quasienergy", th.typical_quasienergy},
                                     {"shannon_entropy", th.typical_entropy},
                                     {"intensity_fitted_rate", amp.fitted_rate},
                                     {"intensity_ks_exp1", amp.ks_exponential_unit},
                                     {"intensity_ks_fitted", amp.ks_exponential_fitted},
                                     {"phase_max_relative_deviation", amp.phase_max_relative_deviation}};
    report["thermalization"] = {{"window", {th.t0, th.t1}},
                                {"max_abs_eigenvector_vs_time", th.eigenvector_vs_time.max_abs},
                                {"max_abs_eigenvector_vs_microcanonical", th.eigenvector_vs_microcanonical.max_abs},
                                {"max_abs_time_vs_microcanonical", th.time_vs_microcanonical.max_abs},
                                {"consistent_at_0.05", th.consistent(0.05)}};
    out.write("amplitude_histogram.csv",
              [&](std::ostream& os) { write_histogram_csv(histogram(amp.intensities, 50, 0.0, 10.0), os); });
    out.write("phase_histogram.csv", [&](std::ostream& os) { write_histogram_csv(amp.phase_histogram, os); });
  }

  if (config.spectrum.u_network) {
    const UNetwork net = u_network(op.matrix());
    out.write("unetwork.dot", [&](std::ostream& os) { write_unetwork_dot(net, os); });
    report["u_network"] = {{"vertices", net.n_vertices}, {"edges", net.edges.size()}, {"degree_set", net.degree_set()}};
  }
  if (config.spectrum.dump_operator) {
    out.write("operator.bin", [&](std::ostream& os) { write_operator_binary(op, os); }, std::ios::out | std::ios::binary);
    out.write("operator.json", [&](std::ostream& os) { write_operator_metadata(op, os); });
  }
  write_json(out, "report.json", report);
  out.commit();
  log << "spectrum: " << sp.size() << " levels, " << sp.class_count() << " classes, KS wigner "
      << spacing["ks_wigner"].get<double>() << " poisson " << spacing["ks_poisson"].get<double>() << " -> "
      << config.out << '\n';
}

int dispatch(const std::string& command, const ExperimentConfig& config, std::ostream& log, std::ostream& err) {
  try {
    if (command == "graph") {
      run_graph(config, log);
    } else if (command == "evolve") {
      run_evolve(config, log);
    } else if (command == "spectrum") {
      run_spectrum(config, log);
    } else {
      err << "error: unknown command '" << command << "'\n";
      return kExitConfig;
    }
    return kExitOk;
  } catch (const GuardError& e) {
    err << "refused: " << e.what() << '\n';
    return kExitGuard;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace qwalk::cli
