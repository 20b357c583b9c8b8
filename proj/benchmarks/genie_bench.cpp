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

#include <benchmark/benchmark.h>

#include "cranlearn/config.hpp"
#include "cranlearn/harness.hpp"

namespace {

using namespace cranlearn;

// Best-response genie on the full 41-beam x 11-filter desk scenario.
void BM_GenieSearch(benchmark::State& state) {
  const ExperimentConfig cfg = default_config();
  ScenarioConfig scn_cfg = cfg.scenario;
  scn_cfg.rng_seed = 3;
  const Scenario scn = build_scenario(scn_cfg);
  const PairChannels channels = compute_pair_channels(scn, 0, cfg.channel);
  const LinkGains gains = compute_pathloss_gains(scn, 0, cfg.channel.pathloss);
  const Codebook tx = make_tx_codebook(cfg);
  const Codebook rx = make_rx_codebook(cfg);
  const PowerTable table(channels, gains, tx, rx, cfg.phy);
  std::vector<Vec3> positions;
  for (const auto& u : scn.users) positions.push_back(u.position);

  for (auto _ : state) {
    const auto records = genie_search(table, positions, cfg.phy, cfg.genie, 9);
    benchmark::DoNotOptimize(records.data());
  }
}
BENCHMARK(BM_GenieSearch);

// One full training phase at desk scale (dominates pipeline runtime).
void BM_TrainingPhase(benchmark::State& state) {
  ExperimentConfig cfg = default_config();
  cfg.training_positions_per_user = static_cast<int>(state.range(0));
  for (auto _ : state) {
    const TrainingArtifacts art = run_training_phase(cfg, 1);
    benchmark::DoNotOptimize(art.records.data());
  }
}
BENCHMARK(BM_TrainingPhase)->Arg(25)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
