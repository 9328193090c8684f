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

#include <cstdint>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qwalk/errors.hpp"
#include "qwalk/graph.hpp"
#include "qwalk/ops.hpp"
#include "qwalk/state.hpp"

namespace qwalk::cli {

/// Invalid or inconsistent experiment configuration (exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitGuard = 3;

/// Either a generated family or an edge-list file. Randomized families take
/// their seed from ExperimentConfig::seed.
struct GraphSource {
  std::optional<std::string> file;
  GraphSpec spec;
};

struct SpectrumOptions {
  bool eigenvectors = true;
  bool filter_degeneracy = true;
  int histogram_bins = 50;
  int spacing_bins = 50;
  double spacing_max = 4.0;
  bool u_network = false;
  bool dump_operator = false;
};

struct ExperimentConfig {
  GraphSource graph;
  CoinFamily coin = CoinFamily::kGrover;
  CzMode cz_mode = CzMode::kEdgeList;
  std::vector<BasisKet> initial{{0, 0, 0}};
  int steps = 400;
  std::optional<int> t0;  // stationary window start; steps / 2 when unset
  std::optional<int> t1;  // window end; steps when unset
  std::uint64_t seed = 0;
  std::string out = "qwalk_out";
  Guards guards;
  SpectrumOptions spectrum;

  int window_start() const { return t0.value_or(steps / 2); }
  int window_end() const { return t1.value_or(steps); }
};

/// Strict parse: unknown keys and wrongly typed values raise ConfigError.
ExperimentConfig config_from_json(const nlohmann::json& j);
/// Fully resolved form; config_from_json(config_to_json(c)) == c.
nlohmann::ordered_json config_to_json(const ExperimentConfig& config);
ExperimentConfig load_config(const std::string& path);
/// Range and consistency checks; throws ConfigError.
void validate(const ExperimentConfig& config);

Graph resolve_graph(const ExperimentConfig& config);

/// Each command writes into config.out, including config.json, and removes
/// whatever it wrote if it fails.
void run_graph(const ExperimentConfig& config, std::ostream& log);
void run_evolve(const ExperimentConfig& config, std::ostream& log);
void run_spectrum(const ExperimentConfig& config, std::ostream& log);

/// Runs a command by name and maps failures onto exit codes, printing the
/// message to `err`.
int dispatch(const std::string& command, const ExperimentConfig& config, std::ostream& log, std::ostream& err);

}  // namespace qwalk::cli
