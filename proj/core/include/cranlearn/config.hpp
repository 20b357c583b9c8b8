// SPDX-License-Identifier: Apache-2.0
//
// cranlearn - position-based learning-driven resource allocation for a TDD CRAN downlink
// Copyright (C) 2026 the cranlearn authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef CRANLEARN_CONFIG_HPP
#define CRANLEARN_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "cranlearn/allocator.hpp"
#include "cranlearn/overhead.hpp"

namespace cranlearn {

/// Configuration error carrying the offending key path.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& message)
      : std::runtime_error(key + ": " + message), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

struct CodebookConfig {
  double step_deg = 3.0;
  double min_deg = -60.0;
  double max_deg = 60.0;
};

struct ForestGridEntry {
  int num_trees = 10;
  int max_depth = 3;
};

struct ForestConfig {
  int num_trees = 10;
  int max_depth = 3;
  int features_per_split = 0;  // <= 0 selects ceil(sqrt(I))
  std::vector<ForestGridEntry> grid{{5, 3}, {10, 3}, {10, 4}, {20, 3}, {20, 4}};
};

/// Full experiment description; the unit of reproducibility together with
/// the seed list.
struct ExperimentConfig {
  ScenarioConfig scenario;
  ChannelConfig channel;
  PhyConfig phy;
  double carrier_hz = 3.5e9;
  double noise_figure_db = 0.0;
  CodebookConfig tx_codebook{3.0, -60.0, 60.0};
  CodebookConfig rx_codebook{12.0, -60.0, 60.0};
  FrameConfig frame;
  ForestConfig forest;
  GenieSearchConfig genie;

  int candidate_positions_per_user = 1000;
  int training_positions_per_user = 100;
  int test_positions_per_user = 100;
  std::size_t max_training_rows = 10000;

  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::vector<double> noise_variances{0.0, 0.4, 0.6, 1.0};
  std::vector<double> density_sweep{0.01, 0.03, 0.05, 0.1};
  std::vector<double> shadow_height_sweep{1.5, 2.5, 3.5, 5.0};
};

/// Built-in desk-scale defaults (also what "--config default" selects).
ExperimentConfig default_config();

/// Loads a JSON config file (comments allowed). Unknown keys are rejected;
/// missing keys keep their defaults. Throws ConfigError with the failing
/// key, or std::runtime_error when the file cannot be read.
ExperimentConfig load_config(const std::string& path);

/// Derived helpers.
Codebook make_tx_codebook(const ExperimentConfig& cfg);
Codebook make_rx_codebook(const ExperimentConfig& cfg);

/// Thermal noise over the configured bandwidth plus the noise figure.
double thermal_noise_w(double bandwidth_hz, double noise_figure_db);

/// Validates cross-field constraints (positive powers, sweep lists
/// non-empty, at least one seed). Throws ConfigError.
void validate(const ExperimentConfig& cfg);

}  // namespace cranlearn

#endif  // CRANLEARN_CONFIG_HPP
