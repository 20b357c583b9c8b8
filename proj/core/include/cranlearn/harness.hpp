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

#ifndef CRANLEARN_HARNESS_HPP
#define CRANLEARN_HARNESS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cranlearn/config.hpp"

namespace cranlearn {

struct AccuracyRow {
  int num_trees = 0;
  int max_depth = 0;
  double training_accuracy = 0.0;
};

/// One line of results.csv. Column order is part of the file contract:
/// experiment,seed,scheme,sweep_value,sum_goodput_bits_per_tti,
/// relative_to_genie,overhead_fraction,effective_throughput_bps
struct ResultRow {
  std::string experiment;
  std::uint64_t seed = 0;
  std::string scheme;
  double sweep_value = 0.0;
  double sum_goodput_bits_per_tti = 0.0;
  double relative_to_genie = 0.0;
  double overhead_fraction = 0.0;
  double effective_throughput_bps = 0.0;
};

/// Everything the offline phase produces for one seed.
struct TrainingArtifacts {
  Scenario base_scenario;
  std::vector<std::vector<Vec3>> candidate_positions;  // per user
  std::vector<std::vector<Vec3>> training_positions;   // per user, sampled
  std::vector<GenieRecord> records;                    // labeled
  PacketSizeSet packet_sizes;
  TrainingSet training_set;
  TrainingTable table;
  RandomForest forest;  // the configured (T_n, T_d) selection
  std::vector<AccuracyRow> accuracy_grid;
};

/// Offline phase: sample training placements, run the genie over them,
/// design packet sizes, build the balanced training set, train the forest
/// grid and keep the configured setting.
TrainingArtifacts run_training_phase(const ExperimentConfig& cfg, std::uint64_t seed);

/// Runs the four schemes on identical test placements for every noise
/// variance. Test placements are a seeded draw from the training placements
/// (users re-visit labeled joint configurations); reported positions get
/// zero-mean Gaussian noise per horizontal coordinate while the channels use
/// the exact positions. Emits one row per (variance, scheme) with experiment
/// id `experiment_id`; the learned scheme additionally gets a
/// learned_predicted row carrying its psr * size score.
std::vector<ResultRow> run_comparison_all(const ExperimentConfig& cfg,
                                          const TrainingArtifacts& artifacts,
                                          const std::vector<double>& noise_variances,
                                          std::uint64_t seed,
                                          const std::string& experiment_id = "compare");

/// Single-variance convenience wrapper.
std::vector<ResultRow> run_comparison(const ExperimentConfig& cfg,
                                      const TrainingArtifacts& artifacts, double noise_variance,
                                      std::uint64_t seed);

enum class SweepAxis { scatterer_density, shadow_height };

/// Regenerates the test world per sweep value (no retraining) and scores all
/// schemes at perfect positions.
std::vector<ResultRow> run_sweep(const ExperimentConfig& cfg, const TrainingArtifacts& artifacts,
                                 SweepAxis axis, const std::vector<double>& values,
                                 std::uint64_t seed);

/// Applies the position-acquisition overhead to the learned scheme and the
/// CSI-acquisition overhead (plain and nearby-users variants) to the genie,
/// starting from the perfect-position comparison rows.
std::vector<ResultRow> run_overhead_study(const ExperimentConfig& cfg,
                                          const std::vector<ResultRow>& comparison_rows);

enum class RunMode { train, compare, sweep, overhead, all };

struct RunOutputs {
  std::vector<ResultRow> rows;                     // sorted, ready for CSV
  std::vector<AccuracyRow> accuracy_grid_mean;     // averaged over seeds
  RandomForest forest;                             // first seed's selection
  TrainingSet training_set;                        // first seed's
  std::vector<GenieRecord> records;                // first seed's
  std::string summary;
};

/// Full pipeline over all configured seeds (seeds run in parallel; outputs
/// are gathered and sorted so results are independent of scheduling).
RunOutputs run_experiment(const ExperimentConfig& cfg, RunMode mode);

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows);
std::vector<ResultRow> parse_results_csv(std::istream& in);

}  // namespace cranlearn

#endif  // CRANLEARN_HARNESS_HPP
