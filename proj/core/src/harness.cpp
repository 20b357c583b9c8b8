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

#include "cranlearn/harness.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <istream>
#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cranlearn {

namespace {

// Harness-local RNG stream salts.
constexpr std::uint64_t kGenieTrainSalt = 0x6e11e001;
constexpr std::uint64_t kGenieTestSalt = 0x6e11e002;
constexpr std::uint64_t kRandomPacketSalt = 0x7a9d0001;
constexpr std::uint64_t kGeoPacketSalt = 0x7a9d0002;
constexpr std::uint64_t kLearnedSalt = 0x7a9d0003;
constexpr std::uint64_t kForestSalt = 0xf02e5701;

// Near-square grid factorization: nx divides n, nx close to sqrt(n).
std::pair<int, int> grid_shape(int n) {
  int nx = static_cast<int>(std::floor(std::sqrt(static_cast<double>(n))));
  while (nx > 1 && n % nx != 0) --nx;
  return {nx, n / nx};
}

// Uniform grid of candidate positions over the user's quadrant, inset by 10%
// of the quadrant size on each side.
std::vector<Vec3> candidate_grid(const Scenario& scn, const User& user, int count) {
  const double half_w = scn.area_width_m / 2.0;
  const double half_h = scn.area_height_m / 2.0;
  const double qx0 = user.position.x < half_w ? 0.0 : half_w;
  const double qy0 = user.position.y < half_h ? 0.0 : half_h;
  const double inset_x = 0.05 * half_w;
  const double inset_y = 0.05 * half_h;
  const double x0 = qx0 + inset_x, x1 = qx0 + half_w - inset_x;
  const double y0 = qy0 + inset_y, y1 = qy0 + half_h - inset_y;

  const auto [nx, ny] = grid_shape(count);
  std::vector<Vec3> grid;
  grid.reserve(static_cast<std::size_t>(count));
  for (int iy = 0; iy < ny; ++iy)
    for (int ix = 0; ix < nx; ++ix)
      grid.push_back({x0 + (ix + 0.5) * (x1 - x0) / nx, y0 + (iy + 0.5) * (y1 - y0) / ny,
                      user.position.z});
  return grid;
}

std::vector<Vec3> sample_positions(const std::vector<Vec3>& candidates, int count,
                                   std::uint64_t seed) {
  std::vector<Vec3> out;
  out.reserve(static_cast<std::size_t>(count));
  Rng rng = make_rng(seed);
  std::sample(candidates.begin(), candidates.end(), std::back_inserter(out),
              static_cast<std::size_t>(count), rng);
  return out;
}

Scenario place_all_users(const Scenario& base, const std::vector<std::vector<Vec3>>& positions,
                         std::size_t placement) {
  Scenario scn = base;
  for (std::size_t u = 0; u < base.users.size(); ++u)
    scn = place_user(scn, base.users[u].id, positions[u][placement]);
  return scn;
}

struct PlacementWorld {
  Scenario scenario;
  PairChannels channels;
  LinkGains gains;
  PowerTable table;
  std::vector<Vec3> positions;
};

PlacementWorld make_world(const ExperimentConfig& cfg, const Scenario& base,
                          const std::vector<std::vector<Vec3>>& positions, std::size_t placement,
                          const Codebook& tx, const Codebook& rx) {
  Scenario scn = place_all_users(base, positions, placement);
  PairChannels channels = compute_pair_channels(scn, 0, cfg.channel);
  LinkGains gains = compute_pathloss_gains(scn, 0, cfg.channel.pathloss);
  PowerTable table(channels, gains, tx, rx, cfg.phy);
  std::vector<Vec3> pos;
  pos.reserve(scn.users.size());
  for (const auto& u : scn.users) pos.push_back(u.position);
  return {std::move(scn), std::move(channels), std::move(gains), std::move(table),
          std::move(pos)};
}

double sum_goodput(const std::vector<AllocationDecision>& decisions) {
  double s = 0.0;
  for (const auto& d : decisions) s += d.goodput_bits;
  return s;
}

}  // namespace

TrainingArtifacts run_training_phase(const ExperimentConfig& cfg, std::uint64_t seed) {
  TrainingArtifacts art;
  ScenarioConfig scn_cfg = cfg.scenario;
  scn_cfg.rng_seed = seed;
  art.base_scenario = build_scenario(scn_cfg);

  const Codebook tx = make_tx_codebook(cfg);
  const Codebook rx = make_rx_codebook(cfg);
  const std::size_t num_users = art.base_scenario.users.size();

  art.candidate_positions.reserve(num_users);
  art.training_positions.reserve(num_users);
  for (std::size_t u = 0; u < num_users; ++u) {
    art.candidate_positions.push_back(
        candidate_grid(art.base_scenario, art.base_scenario.users[u], cfg.candidate_positions_per_user));
    art.training_positions.push_back(
        sample_positions(art.candidate_positions.back(), cfg.training_positions_per_user,
                         derive_seed(seed, rng_stream::kTrainPositions, u)));
  }

  const int placements = cfg.training_positions_per_user;
  for (int j = 0; j < placements; ++j) {
    const PlacementWorld world =
        make_world(cfg, art.base_scenario, art.training_positions, static_cast<std::size_t>(j), tx, rx);
    auto records = genie_search(world.table, world.positions, cfg.phy, cfg.genie,
                                derive_seed(seed, kGenieTrainSalt, static_cast<std::uint64_t>(j)));
    art.records.insert(art.records.end(), records.begin(), records.end());
  }

  std::vector<double> capacities;
  capacities.reserve(art.records.size());
  for (const auto& rec : art.records) capacities.push_back(rec.capacity_bits);
  art.packet_sizes = design_packet_sizes(capacities);
  assign_labels(art.records, art.packet_sizes);
  art.training_set = build_training_set(art.records, art.packet_sizes, seed, cfg.max_training_rows);
  art.table = build_training_table(art.records, art.packet_sizes);

  bool selected_found = false;
  for (std::size_t g = 0; g < cfg.forest.grid.size(); ++g) {
    const auto& entry = cfg.forest.grid[g];
    RandomForest rf = train(art.training_set, entry.num_trees, entry.max_depth,
                            cfg.forest.features_per_split, derive_seed(seed, kForestSalt, g));
    const double acc = accuracy(rf, art.training_set.rows);
    art.accuracy_grid.push_back({entry.num_trees, entry.max_depth, acc});
    if (entry.num_trees == cfg.forest.num_trees && entry.max_depth == cfg.forest.max_depth) {
      art.forest = std::move(rf);
      selected_found = true;
    }
  }
  if (!selected_found) {
    art.forest = train(art.training_set, cfg.forest.num_trees, cfg.forest.max_depth,
                       cfg.forest.features_per_split,
                       derive_seed(seed, kForestSalt, cfg.forest.grid.size()));
    art.accuracy_grid.push_back(
        {cfg.forest.num_trees, cfg.forest.max_depth, accuracy(art.forest, art.training_set.rows)});
  }
  return art;
}

std::vector<ResultRow> run_comparison_all(const ExperimentConfig& cfg,
                                          const TrainingArtifacts& artifacts,
                                          const std::vector<double>& noise_variances,
                                          std::uint64_t seed, const std::string& experiment_id) {
  const Codebook tx = make_tx_codebook(cfg);
  const Codebook rx = make_rx_codebook(cfg);

  ScenarioConfig scn_cfg = cfg.scenario;
  scn_cfg.rng_seed = seed;
  const Scenario base = build_scenario(scn_cfg);
  const std::size_t num_users = base.users.size();

  // Test placements are drawn (seeded, without replacement) from the
  // training placements: the users re-visit joint configurations the genie
  // labeled, as they would when riding the same trajectories, and only the
  // reported positions differ. Environment changes (density, shadowing)
  // still come from the config used to rebuild the world below.
  std::vector<std::size_t> placement_ids(static_cast<std::size_t>(cfg.training_positions_per_user));
  std::iota(placement_ids.begin(), placement_ids.end(), 0u);
  {
    Rng rng = make_rng(derive_seed(seed, rng_stream::kTestPositions));
    std::shuffle(placement_ids.begin(), placement_ids.end(), rng);
  }
  placement_ids.resize(static_cast<std::size_t>(cfg.test_positions_per_user));

  std::vector<std::vector<Vec3>> test_positions(num_users);
  for (std::size_t u = 0; u < num_users; ++u)
    for (std::size_t id : placement_ids)
      test_positions[u].push_back(artifacts.training_positions[u][id]);

  std::vector<int> user_ids;
  for (const auto& u : base.users) user_ids.push_back(u.id);

  const std::size_t nv = noise_variances.size();
  std::vector<double> learned_realized(nv, 0.0), learned_predicted(nv, 0.0), geo_sum(nv, 0.0);
  double genie_total = 0.0, random_total = 0.0;

  const int placements = cfg.test_positions_per_user;
  for (int j = 0; j < placements; ++j) {
    const PlacementWorld world =
        make_world(cfg, base, test_positions, static_cast<std::size_t>(j), tx, rx);

    auto genie_records = genie_search(world.table, world.positions, cfg.phy, cfg.genie,
                                      derive_seed(seed, kGenieTestSalt, static_cast<std::uint64_t>(j)));
    for (std::size_t i = 0; i < genie_records.size(); ++i)
      genie_records[i].user_id = world.scenario.users[i].id;
    assign_labels(genie_records, artifacts.packet_sizes);

    genie_total += sum_goodput(allocate_genie(genie_records, artifacts.packet_sizes));
    {
      Rng rng = make_rng(derive_seed(seed, kRandomPacketSalt, static_cast<std::uint64_t>(j)));
      random_total += sum_goodput(allocate_random(genie_records, artifacts.packet_sizes, rng));
    }

    // Unit noise draws shared across variances (scaled by sqrt(variance)),
    // so the noise study varies only the magnitude, not the draw.
    std::vector<Vec3> unit_noise(num_users);
    {
      Rng rng = make_rng(derive_seed(seed, rng_stream::kPositionNoise, static_cast<std::uint64_t>(j)));
      std::normal_distribution<double> gauss(0.0, 1.0);
      for (auto& n : unit_noise) n = {gauss(rng), gauss(rng), 0.0};
    }

    for (std::size_t v = 0; v < nv; ++v) {
      const double sigma = std::sqrt(noise_variances[v]);
      std::vector<Vec3> reported(num_users);
      for (std::size_t u = 0; u < num_users; ++u)
        reported[u] = world.positions[u] + unit_noise[u] * sigma;

      // Geometric baseline: beams from the reported geometry, outcomes on
      // the true channels.
      {
        Scenario believed = world.scenario;
        for (std::size_t u = 0; u < num_users; ++u)
          believed = place_user(believed, believed.users[u].id, reported[u]);
        const BeamAssignment assignment = geometric_assignment(believed, tx, rx);
        const std::vector<double> caps = world.table.capacities(assignment, cfg.phy);
        Rng rng = make_rng(derive_seed(seed, kGeoPacketSalt,
                                       static_cast<std::uint64_t>(j) * 1000 + v));
        std::uniform_int_distribution<int> pick(0, kNumPacketSizes - 1);
        for (std::size_t u = 0; u < num_users; ++u) {
          const double size = artifacts.packet_sizes.sizes[static_cast<std::size_t>(pick(rng))];
          if (transmission_outcome(size, caps[u])) geo_sum[v] += size;
        }
      }

      // Learned scheme: predicted score and realized outcome.
      {
        Rng rng = make_rng(derive_seed(seed, kLearnedSalt, static_cast<std::uint64_t>(j)));
        const auto decisions =
            allocate_learned(artifacts.forest, reported, user_ids, artifacts.table, rng);
        BeamAssignment assignment;
        for (const auto& d : decisions) {
          assignment.beams.push_back(d.beam_index);
          assignment.filters.push_back(d.filter_index);
        }
        const std::vector<double> caps = world.table.capacities(assignment, cfg.phy);
        for (std::size_t u = 0; u < num_users; ++u) {
          learned_predicted[v] += decisions[u].goodput_bits;
          if (transmission_outcome(decisions[u].packet_size_bits, caps[u]))
            learned_realized[v] += decisions[u].packet_size_bits;
        }
      }
    }
  }

  const double scale = 1.0 / static_cast<double>(placements);
  genie_total *= scale;
  random_total *= scale;
  for (std::size_t v = 0; v < nv; ++v) {
    learned_realized[v] *= scale;
    learned_predicted[v] *= scale;
    geo_sum[v] *= scale;
  }

  auto make_row = [&](const std::string& scheme, double sweep_value, double sum) {
    ResultRow row;
    row.experiment = experiment_id;
    row.seed = seed;
    row.scheme = scheme;
    row.sweep_value = sweep_value;
    row.sum_goodput_bits_per_tti = sum;
    row.relative_to_genie = genie_total > 0.0 ? sum / genie_total : 0.0;
    row.overhead_fraction = 0.0;
    row.effective_throughput_bps = effective_throughput(sum, 0.0, cfg.scenario.tti_s);
    return row;
  };

  std::vector<ResultRow> rows;
  for (std::size_t v = 0; v < nv; ++v) {
    const double variance = noise_variances[v];
    rows.push_back(make_row("genie", variance, genie_total));
    rows.push_back(make_row("learned", variance, learned_realized[v]));
    rows.push_back(make_row("learned_predicted", variance, learned_predicted[v]));
    rows.push_back(make_row("random_optimal", variance, random_total));
    rows.push_back(make_row("random_geometric", variance, geo_sum[v]));
  }
  return rows;
}

std::vector<ResultRow> run_comparison(const ExperimentConfig& cfg,
                                      const TrainingArtifacts& artifacts, double noise_variance,
                                      std::uint64_t seed) {
  return run_comparison_all(cfg, artifacts, {noise_variance}, seed);
}

std::vector<ResultRow> run_sweep(const ExperimentConfig& cfg, const TrainingArtifacts& artifacts,
                                 SweepAxis axis, const std::vector<double>& values,
                                 std::uint64_t seed) {
  std::vector<ResultRow> rows;
  for (double value : values) {
    ExperimentConfig swept = cfg;
    if (axis == SweepAxis::scatterer_density) {
      swept.scenario.scatterer_density_per_m2 = value;
    } else {
      for (auto& obj : swept.scenario.shadows) obj.height_m = value;
    }
    const std::string id = axis == SweepAxis::scatterer_density ? "density" : "shadow";
    auto value_rows = run_comparison_all(swept, artifacts, {0.0}, seed, id);
    for (auto& row : value_rows) {
      row.sweep_value = value;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::vector<ResultRow> run_overhead_study(const ExperimentConfig& cfg,
                                          const std::vector<ResultRow>& comparison_rows) {
  // Start from the perfect-position comparison results.
  const ResultRow* genie_row = nullptr;
  const ResultRow* learned_row = nullptr;
  for (const auto& row : comparison_rows) {
    if (row.experiment != "compare" || row.sweep_value != 0.0) continue;
    if (row.scheme == "genie") genie_row = &row;
    if (row.scheme == "learned") learned_row = &row;
  }
  if (genie_row == nullptr || learned_row == nullptr)
    throw std::invalid_argument("run_overhead_study: missing perfect-position comparison rows");

  const int num_users = cfg.scenario.num_rrhs;
  const double tti = cfg.scenario.tti_s;
  const double genie_rate = genie_row->sum_goodput_bits_per_tti / tti;

  auto make_row = [&](const std::string& scheme, double raw_bits_per_tti, double oh) {
    ResultRow row;
    row.experiment = "overhead";
    row.seed = genie_row->seed;
    row.scheme = scheme;
    row.sweep_value = 0.0;
    row.sum_goodput_bits_per_tti = raw_bits_per_tti;
    row.overhead_fraction = oh;
    row.effective_throughput_bps = effective_throughput(raw_bits_per_tti, oh, tti);
    row.relative_to_genie = genie_rate > 0.0 ? row.effective_throughput_bps / genie_rate : 0.0;
    return row;
  };

  std::vector<ResultRow> rows;
  rows.push_back(make_row("genie", genie_row->sum_goodput_bits_per_tti, 0.0));
  rows.push_back(make_row("learned", learned_row->sum_goodput_bits_per_tti,
                          position_overhead(cfg.frame, num_users)));
  rows.push_back(make_row("genie_csi", genie_row->sum_goodput_bits_per_tti,
                          csi_overhead(cfg.frame, num_users)));
  rows.push_back(make_row("genie_csi_nearby", genie_row->sum_goodput_bits_per_tti,
                          csi_overhead_nearby(cfg.frame, num_users)));
  return rows;
}

namespace {

struct SeedOutputs {
  std::vector<ResultRow> rows;
  std::vector<AccuracyRow> accuracy_grid;
  RandomForest forest;
  TrainingSet training_set;
  std::vector<GenieRecord> records;
};

SeedOutputs run_seed(const ExperimentConfig& cfg, RunMode mode, std::uint64_t seed) {
  SeedOutputs out;
  TrainingArtifacts art = run_training_phase(cfg, seed);
  out.accuracy_grid = art.accuracy_grid;

  if (mode == RunMode::compare || mode == RunMode::all) {
    auto rows = run_comparison_all(cfg, art, cfg.noise_variances, seed);
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  } else if (mode == RunMode::overhead) {
    auto rows = run_comparison_all(cfg, art, {0.0}, seed);
    out.rows.insert(out.rows.end(), rows.begin(), rows.end());
  }

  if (mode == RunMode::sweep || mode == RunMode::all) {
    auto density = run_sweep(cfg, art, SweepAxis::scatterer_density, cfg.density_sweep, seed);
    out.rows.insert(out.rows.end(), density.begin(), density.end());
    auto shadow = run_sweep(cfg, art, SweepAxis::shadow_height, cfg.shadow_height_sweep, seed);
    out.rows.insert(out.rows.end(), shadow.begin(), shadow.end());
  }

  if (mode == RunMode::overhead || mode == RunMode::all) {
    auto oh_rows = run_overhead_study(cfg, out.rows);
    out.rows.insert(out.rows.end(), oh_rows.begin(), oh_rows.end());
  }

  out.forest = std::move(art.forest);
  out.training_set = std::move(art.training_set);
  out.records = std::move(art.records);
  return out;
}

std::string format_double(const char* fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), fmt, v);
  return buf;
}

std::string build_summary(const ExperimentConfig& cfg, const RunOutputs& outputs) {
  std::ostringstream out;
  out << "cranlearn experiment summary\n";
  out << "============================\n";
  out << "seeds: " << cfg.seeds.size() << ", users: " << cfg.scenario.num_rrhs
      << ", training placements: " << cfg.training_positions_per_user
      << ", test placements: " << cfg.test_positions_per_user << "\n\n";

  out << "training rows (first seed): " << outputs.training_set.rows.size();
  if (outputs.training_set.rows.size() < 100) out << "  [tiny dataset]";
  out << "\n\n";

  out << "forest training accuracy (mean over seeds)\n";
  out << "  trees  depth  accuracy\n";
  for (const auto& row : outputs.accuracy_grid_mean) {
    out << "  " << row.num_trees << (row.num_trees < 10 ? "      " : "     ") << row.max_depth
        << "      " << format_double("%.3f", row.training_accuracy);
    if (row.num_trees == cfg.forest.num_trees && row.max_depth == cfg.forest.max_depth)
      out << "  (selected)";
    out << '\n';
  }
  out << '\n';

  // Mean and standard deviation of relative goodput per (experiment, sweep
  // value, scheme) across seeds.
  struct Key {
    std::string experiment;
    double sweep_value;
    std::string scheme;
    bool operator<(const Key& o) const {
      if (experiment != o.experiment) return experiment < o.experiment;
      if (sweep_value != o.sweep_value) return sweep_value < o.sweep_value;
      return scheme < o.scheme;
    }
  };
  std::map<Key, std::vector<double>> relatives;
  std::map<Key, std::vector<double>> effectives;
  for (const auto& row : outputs.rows) {
    relatives[{row.experiment, row.sweep_value, row.scheme}].push_back(row.relative_to_genie);
    effectives[{row.experiment, row.sweep_value, row.scheme}].push_back(
        row.effective_throughput_bps);
  }
  auto mean = [](const std::vector<double>& v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  };
  auto stdev = [&](const std::vector<double>& v) {
    if (v.size() < 2) return 0.0;
    const double m = mean(v);
    double ss = 0.0;
    for (double x : v) ss += (x - m) * (x - m);
    return std::sqrt(ss / static_cast<double>(v.size() - 1));
  };

  std::string last_section;
  for (const auto& [key, values] : relatives) {
    if (key.experiment != last_section) {
      out << key.experiment << " (relative goodput vs genie, mean +/- std over seeds)\n";
      last_section = key.experiment;
    }
    out << "  " << key.experiment << "=" << format_double("%g", key.sweep_value) << "  "
        << key.scheme << ": " << format_double("%.4f", mean(values)) << " +/- "
        << format_double("%.4f", stdev(values));
    if (key.experiment == "overhead") {
      const auto& eff = effectives[key];
      out << "  effective " << format_double("%.0f", mean(eff)) << " bit/s";
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

RunOutputs run_experiment(const ExperimentConfig& cfg, RunMode mode) {
  validate(cfg);

  std::vector<std::future<SeedOutputs>> futures;
  futures.reserve(cfg.seeds.size());
  for (std::uint64_t seed : cfg.seeds)
    futures.push_back(
        std::async(std::launch::async, [&cfg, mode, seed] { return run_seed(cfg, mode, seed); }));

  RunOutputs outputs;
  std::vector<std::vector<AccuracyRow>> grids;
  for (std::size_t i = 0; i < futures.size(); ++i) {
    SeedOutputs seed_out = futures[i].get();
    outputs.rows.insert(outputs.rows.end(), seed_out.rows.begin(), seed_out.rows.end());
    grids.push_back(std::move(seed_out.accuracy_grid));
    if (i == 0) {
      outputs.forest = std::move(seed_out.forest);
      outputs.training_set = std::move(seed_out.training_set);
      outputs.records = std::move(seed_out.records);
    }
  }

  // Average the accuracy grid across seeds (all seeds share the grid shape).
  if (!grids.empty()) {
    for (std::size_t g = 0; g < grids.front().size(); ++g) {
      AccuracyRow row = grids.front()[g];
      double sum = 0.0;
      for (const auto& grid : grids) sum += grid[g].training_accuracy;
      row.training_accuracy = sum / static_cast<double>(grids.size());
      outputs.accuracy_grid_mean.push_back(row);
    }
  }

  std::sort(outputs.rows.begin(), outputs.rows.end(), [](const ResultRow& a, const ResultRow& b) {
    if (a.experiment != b.experiment) return a.experiment < b.experiment;
    if (a.sweep_value != b.sweep_value) return a.sweep_value < b.sweep_value;
    if (a.seed != b.seed) return a.seed < b.seed;
    return a.scheme < b.scheme;
  });

  outputs.summary = build_summary(cfg, outputs);
  return outputs;
}

void write_results_csv(std::ostream& out, const std::vector<ResultRow>& rows) {
  out << "experiment,seed,scheme,sweep_value,sum_goodput_bits_per_tti,relative_to_genie,"
         "overhead_fraction,effective_throughput_bps\n";
  for (const auto& row : rows) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%llu,%s,%g,%.6f,%.6f,%.9f,%.3f\n",
                  row.experiment.c_str(), static_cast<unsigned long long>(row.seed),
                  row.scheme.c_str(), row.sweep_value, row.sum_goodput_bits_per_tti,
                  row.relative_to_genie, row.overhead_fraction, row.effective_throughput_bps);
    out << buf;
  }
}

std::vector<ResultRow> parse_results_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("results.csv: empty file");
  if (line !=
      "experiment,seed,scheme,sweep_value,sum_goodput_bits_per_tti,relative_to_genie,"
      "overhead_fraction,effective_throughput_bps")
    throw std::runtime_error("results.csv: unexpected header");

  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t comma = line.find(',', start);
      fields.push_back(line.substr(start, comma - start));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 8) throw std::runtime_error("results.csv: malformed row: " + line);
    ResultRow row;
    row.experiment = fields[0];
    row.seed = std::stoull(fields[1]);
    row.scheme = fields[2];
    row.sweep_value = std::stod(fields[3]);
    row.sum_goodput_bits_per_tti = std::stod(fields[4]);
    row.relative_to_genie = std::stod(fields[5]);
    row.overhead_fraction = std::stod(fields[6]);
    row.effective_throughput_bps = std::stod(fields[7]);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace cranlearn
