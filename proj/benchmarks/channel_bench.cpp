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

namespace {

using namespace cranlearn;

void BM_ChannelMatrix(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.rng_seed = 1;
  cfg.scatterer_density_per_m2 = static_cast<double>(state.range(0)) / 10000.0;
  const Scenario scn = build_scenario(cfg);
  const ChannelConfig channel_cfg;
  for (auto _ : state) {
    const ChannelMatrix cm = channel_matrix(scn, 0, 0, 0, channel_cfg);
    benchmark::DoNotOptimize(cm.entries.memptr());
  }
}
BENCHMARK(BM_ChannelMatrix)->Arg(100)->Arg(500)->Arg(1000);

void BM_PairChannels(benchmark::State& state) {
  ScenarioConfig cfg;
  cfg.rng_seed = 1;
  const Scenario scn = build_scenario(cfg);
  const ChannelConfig channel_cfg;
  for (auto _ : state) {
    const PairChannels pc = compute_pair_channels(scn, 0, channel_cfg);
    benchmark::DoNotOptimize(pc.mats.data());
  }
}
BENCHMARK(BM_PairChannels);

void BM_PowerTable(benchmark::State& state) {
  const ExperimentConfig cfg = default_config();
  ScenarioConfig scn_cfg = cfg.scenario;
  scn_cfg.rng_seed = 1;
  const Scenario scn = build_scenario(scn_cfg);
  const PairChannels channels = compute_pair_channels(scn, 0, cfg.channel);
  const LinkGains gains = compute_pathloss_gains(scn, 0, cfg.channel.pathloss);
  const Codebook tx = make_tx_codebook(cfg);
  const Codebook rx = make_rx_codebook(cfg);
  for (auto _ : state) {
    const PowerTable table(channels, gains, tx, rx, cfg.phy);
    benchmark::DoNotOptimize(table.num_beams());
  }
}
BENCHMARK(BM_PowerTable);

}  // namespace
