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

#include "cranlearn/forest.hpp"

namespace {

using namespace cranlearn;

TrainingSet synthetic_set(std::size_t n) {
  TrainingSet ts;
  Rng rng = make_rng(77);
  std::uniform_real_distribution<double> u(0.0, 100.0);
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector fv;
    fv.user_id = static_cast<int>(i % 4);
    fv.pos = {u(rng), u(rng), 1.5};
    fv.beam_index = static_cast<int>(i % 41);
    fv.filter_index = static_cast<int>(i % 11);
    fv.packet_size_bits = 1000.0 * (1 + static_cast<double>(i % 5) * 2);
    fv.label = (fv.pos.x + fv.pos.y > 100.0) ? 1 : 0;
    ts.rows.push_back(fv);
  }
  return ts;
}

void BM_ForestTrain(benchmark::State& state) {
  const TrainingSet ts = synthetic_set(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    const RandomForest rf = train(ts, 10, 3, 0, 42);
    benchmark::DoNotOptimize(rf.trees.data());
  }
}
BENCHMARK(BM_ForestTrain)->Arg(500)->Arg(2000)->Arg(10000);

void BM_ForestVotes(benchmark::State& state) {
  const TrainingSet ts = synthetic_set(2000);
  const RandomForest rf = train(ts, 10, 3, 0, 42);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(votes(rf, ts.rows[i]));
    i = (i + 1) % ts.rows.size();
  }
}
BENCHMARK(BM_ForestVotes);

}  // namespace
