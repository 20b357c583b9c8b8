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
//
// End-to-end acceptance suite. Each numbered check prints one PASS/FAIL
// line; the exit code is the number of failures.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "cranlearn/harness.hpp"

namespace cranlearn {
namespace {

int g_failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  std::printf("%s  criterion %d (%s): %s\n", ok ? "PASS" : "FAIL", id, name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.4f", v);
  return buf;
}

// ---------------------------------------------------------------- 1
void check_capacity_arithmetic() {
  const PhyConfig phy;  // 1 ms TTI, 5 MHz
  const bool ok = phy.symbols() == 5000.0 && transport_capacity(1.0, phy.symbols()) == 5000.0;
  report(1, "transport capacity arithmetic", ok,
         "S=" + fmt(phy.symbols()) + ", C(gamma=1)=" + fmt(transport_capacity(1.0, phy.symbols())));
}

// ---------------------------------------------------------------- 2
void check_overhead_exactness() {
  const FrameConfig frame;
  const double pos = position_overhead(frame, 4);
  const double csi = csi_overhead(frame, 4);
  const double nearby = csi_overhead_nearby(frame, 4);
  const bool ok = std::abs(pos - 1.0 / 42.0) < 1e-12 && std::abs(csi - 8.0 / 42.0) < 1e-12 &&
                  nearby >= 0.23 && nearby <= 0.27;
  report(2, "frame overhead model", ok,
         "position=" + fmt(pos * 100.0) + "%, csi(4 users)=" + fmt(csi * 100.0) +
             "%, csi nearby=" + fmt(nearby * 100.0) + "%");
}

// ---------------------------------------------------------------- 3
void check_genie_against_enumeration() {
  const PhyConfig phy;
  const ChannelConfig channel_cfg;
  int matches = 0;
  const int trials = 100;
  for (int seed = 0; seed < trials; ++seed) {
    ScenarioConfig scn_cfg;
    scn_cfg.num_rrhs = 2;
    scn_cfg.rng_seed = static_cast<std::uint64_t>(seed);
    scn_cfg.scatterer_density_per_m2 = 0.002;
    const Scenario scn = build_scenario(scn_cfg);
    const Codebook tx = build_codebook(CodebookSide::transmit, 8, 40.0, -40.0, 40.0);
    const Codebook rx = build_codebook(CodebookSide::receive, 2, 60.0, -30.0, 30.0);
    const PairChannels channels = compute_pair_channels(scn, 0, channel_cfg);
    const LinkGains gains = compute_pathloss_gains(scn, 0, channel_cfg.pathloss);
    const PowerTable table(channels, gains, tx, rx, phy);
    const auto records = genie_search(
        table, {scn.users[0].position, scn.users[1].position}, phy, {}, scn_cfg.rng_seed);

    // Independent joint enumeration straight from the channel matrices.
    double best_sum = -1.0;
    std::array<int, 4> best{};
    for (int b0 = 0; b0 < tx.size(); ++b0)
      for (int f0 = 0; f0 < rx.size(); ++f0)
        for (int b1 = 0; b1 < tx.size(); ++b1)
          for (int f1 = 0; f1 < rx.size(); ++f1) {
            const BeamAssignment a{{b0, b1}, {f0, f1}};
            const auto caps = system_capacities(channels, gains, tx, rx, a, phy);
            const double sum = caps[0] + caps[1];
            if (sum > best_sum) {
              best_sum = sum;
              best = {b0, f0, b1, f1};
            }
          }
    const double got_sum = records[0].capacity_bits + records[1].capacity_bits;
    if (records[0].beam_index == best[0] && records[0].filter_index == best[1] &&
        records[1].beam_index == best[2] && records[1].filter_index == best[3] &&
        std::abs(got_sum - best_sum) <= best_sum * 1e-9)
      ++matches;
  }
  report(3, "genie equals joint enumeration", matches == trials,
         std::to_string(matches) + "/" + std::to_string(trials) + " seeds matched");
}

// ---------------------------------------------------------------- 4
FeatureVector acceptance_row(const std::array<double, kNumFeatures>& x, int label) {
  FeatureVector fv;
  fv.user_id = static_cast<int>(x[0]);
  fv.pos = {x[1], x[2], x[3]};
  fv.beam_index = static_cast<int>(x[4]);
  fv.filter_index = static_cast<int>(x[5]);
  fv.packet_size_bits = x[6];
  fv.label = label;
  return fv;
}

void check_forest_suite() {
  std::string detail;
  bool ok = true;

  // (a) Gini splits against brute force on small nodes.
  {
    Rng rng = make_rng(404);
    std::uniform_int_distribution<int> usize(2, 16), ulabel(0, 1), uvals(0, 4);
    const std::vector<int> all_features{0, 1, 2, 3, 4, 5, 6};
    int agree = 0;
    const int cases = 200;
    for (int trial = 0; trial < cases; ++trial) {
      std::vector<FeatureVector> rows;
      const int n = usize(rng);
      for (int i = 0; i < n; ++i) {
        std::array<double, kNumFeatures> x{};
        for (auto& v : x) v = static_cast<double>(uvals(rng));
        rows.push_back(acceptance_row(x, ulabel(rng)));
      }
      std::vector<std::size_t> idx(rows.size());
      std::iota(idx.begin(), idx.end(), 0u);

      double oracle = -1.0;
      for (int f = 0; f < kNumFeatures; ++f) {
        std::vector<double> values;
        for (std::size_t i : idx) values.push_back(rows[i].features()[f]);
        std::sort(values.begin(), values.end());
        values.erase(std::unique(values.begin(), values.end()), values.end());
        for (std::size_t k = 0; k + 1 < values.size(); ++k) {
          const double threshold = (values[k] + values[k + 1]) / 2.0;
          double nl = 0, ol = 0, nr = 0, orr = 0;
          for (std::size_t i : idx) {
            if (rows[i].features()[f] < threshold) {
              nl += 1;
              ol += rows[i].label;
            } else {
              nr += 1;
              orr += rows[i].label;
            }
          }
          const double pl = ol / nl, pr = orr / nr;
          const double weighted =
              (nl * 2.0 * pl * (1.0 - pl) + nr * 2.0 * pr * (1.0 - pr)) / (nl + nr);
          if (oracle < 0.0 || weighted < oracle) oracle = weighted;
        }
      }
      const double parent = gini_impurity(rows, idx);
      const auto split = best_split(rows, idx, all_features);
      if (split.has_value()) {
        if (std::abs(split->weighted_impurity - oracle) < 1e-12) ++agree;
      } else if (parent == 0.0 || oracle < 0.0 || oracle >= parent - 1e-12) {
        ++agree;
      }
    }
    ok = ok && agree == cases;
    detail += "gini " + std::to_string(agree) + "/" + std::to_string(cases);
  }

  // (b) Vote decomposition.
  {
    TrainingSet ts;
    Rng rng = make_rng(405);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 400; ++i) {
      const double x = u(rng);
      ts.rows.push_back(
          acceptance_row({u(rng), x, u(rng), u(rng), u(rng), u(rng), u(rng)}, x > 5.0 ? 1 : 0));
    }
    const RandomForest rf = train(ts, 10, 3, 0, 406);
    int agree = 0;
    const int cases = 1000;
    for (int trial = 0; trial < cases; ++trial) {
      const FeatureVector fv =
          acceptance_row({u(rng), u(rng), u(rng), u(rng), u(rng), u(rng), u(rng)}, kNoLabel);
      int per_tree = 0;
      for (const auto& tree : rf.trees) per_tree += tree.predict(fv.features());
      if (votes(rf, fv) == per_tree) ++agree;
    }
    ok = ok && agree == cases;
    detail += ", votes " + std::to_string(agree) + "/" + std::to_string(cases);
  }

  // (c) OOB fraction.
  {
    double total = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      Rng rng = make_rng(static_cast<std::uint64_t>(trial) + 500);
      total += static_cast<double>(bootstrap(10000, rng).oob.size()) / 10000.0;
    }
    const double mean = total / 100.0;
    ok = ok && std::abs(mean - 0.368) <= 0.01;
    detail += ", oob mean " + fmt(mean);
  }

  // (d) Separable set to full accuracy at depth 3.
  {
    TrainingSet ts;
    Rng rng = make_rng(407);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int i = 0; i < 300; ++i) {
      const double x = u(rng);
      ts.rows.push_back(
          acceptance_row({u(rng), x, u(rng), u(rng), u(rng), u(rng), u(rng)}, x > 5.0 ? 1 : 0));
    }
    const RandomForest rf = train(ts, 10, 3, kNumFeatures, 408);
    const double acc = accuracy(rf, ts.rows);
    ok = ok && acc == 1.0;
    detail += ", separable accuracy " + fmt(acc);
  }

  report(4, "random forest correctness", ok, detail);
}

// ------------------------------------------------------- 5, 6, 7 (shared run)
struct MeanTable {
  // (experiment, sweep value, scheme) -> mean relative goodput over seeds
  std::map<std::string, std::map<double, std::map<std::string, double>>> mean;

  static MeanTable build(const std::vector<ResultRow>& rows) {
    MeanTable t;
    std::map<std::string, std::map<double, std::map<std::string, std::pair<double, int>>>> acc;
    for (const auto& row : rows) {
      auto& slot = acc[row.experiment][row.sweep_value][row.scheme];
      slot.first += row.relative_to_genie;
      slot.second += 1;
    }
    for (const auto& [exp, by_value] : acc)
      for (const auto& [value, by_scheme] : by_value)
        for (const auto& [scheme, slot] : by_scheme)
          t.mean[exp][value][scheme] = slot.first / slot.second;
    return t;
  }
};

void check_scheme_ordering(const MeanTable& t) {
  const auto& at0 = t.mean.at("compare").at(0.0);
  const double genie = at0.at("genie");
  const double learned = at0.at("learned");
  const double random_optimal = at0.at("random_optimal");
  const double geometric = at0.at("random_geometric");
  const bool ok = genie == 1.0 && genie > learned && learned > random_optimal &&
                  random_optimal > geometric && learned >= 0.70 && learned <= 0.95 &&
                  geometric < 0.25;
  report(5, "scheme ordering and bands", ok,
         "genie=" + fmt(genie) + " > learned=" + fmt(learned) + " > random=" +
             fmt(random_optimal) + " > geometric=" + fmt(geometric));
}

void check_noise_trend(const MeanTable& t, const std::vector<double>& variances) {
  const auto& compare = t.mean.at("compare");
  std::string seq;
  bool ok = true;
  double prev = 2.0;
  double last = 0.0;
  for (double v : variances) {
    const double learned = compare.at(v).at("learned");
    ok = ok && learned <= prev + 1e-12;
    prev = learned;
    last = learned;
    if (!seq.empty()) seq += " >= ";
    seq += fmt(learned);
  }
  ok = ok && last >= 0.55;
  report(6, "position-noise trend", ok, seq + " (floor 0.55)");
}

void check_robustness_bands(const MeanTable& t, const std::vector<double>& densities,
                            const std::vector<double>& heights) {
  auto spread = [&](const std::string& experiment, const std::vector<double>& values) {
    double lo = 2.0, hi = -1.0;
    for (double v : values) {
      const double learned = t.mean.at(experiment).at(v).at("learned");
      lo = std::min(lo, learned);
      hi = std::max(hi, learned);
    }
    return hi - lo;
  };
  const double density_spread = spread("density", densities);
  const double shadow_spread = spread("shadow", heights);
  const bool ok = density_spread <= 0.10 && shadow_spread <= 0.10;
  report(7, "robustness bands", ok,
         "density spread " + fmt(density_spread * 100.0) + "pp, shadow spread " +
             fmt(shadow_spread * 100.0) + "pp (cap 10pp)");
}

// ---------------------------------------------------------------- 8
void check_determinism() {
  ExperimentConfig cfg = default_config();
  cfg.seeds = {1};
  const RunOutputs a = run_experiment(cfg, RunMode::all);
  const RunOutputs b = run_experiment(cfg, RunMode::all);
  std::ostringstream csv_a, csv_b;
  write_results_csv(csv_a, a.rows);
  write_results_csv(csv_b, b.rows);
  const bool ok = csv_a.str() == csv_b.str() && !a.rows.empty();
  report(8, "repeat run determinism", ok,
         ok ? "two full runs byte-identical (" + std::to_string(a.rows.size()) + " rows)"
            : "results differ");
}

// ---------------------------------------------------------------- 9
void check_property_suites() {
  bool ok = true;
  std::string detail;

  // SINR scale consistency.
  {
    Rng rng = make_rng(900);
    std::uniform_real_distribution<double> upow(0.0, 1.0), uscale(-6.0, 6.0);
    int pass = 0;
    for (int i = 0; i < 1000; ++i) {
      const double p = upow(rng), noise = upow(rng) + 1e-9;
      const std::vector<double> interf{upow(rng), upow(rng), upow(rng)};
      const double k = std::pow(10.0, uscale(rng));
      std::vector<double> scaled;
      for (double x : interf) scaled.push_back(x * k);
      const double a = sinr(p, interf, noise), b = sinr(p * k, scaled, noise * k);
      if (std::abs(a - b) <= std::abs(a) * 1e-9 + 1e-15) ++pass;
    }
    ok = ok && pass == 1000;
    detail += "sinr-scale " + std::to_string(pass) + "/1000";
  }

  // Capacity monotonicity.
  {
    Rng rng = make_rng(901);
    std::uniform_real_distribution<double> u(0.0, 1e4);
    int pass = 0;
    for (int i = 0; i < 1000; ++i) {
      double g1 = u(rng), g2 = u(rng);
      if (g1 > g2) std::swap(g1, g2);
      if (transport_capacity(g1, 5000.0) <= transport_capacity(g2, 5000.0)) ++pass;
    }
    ok = ok && pass == 1000;
    detail += ", capacity-mono " + std::to_string(pass) + "/1000";
  }

  const PacketSizeSet sizes{{1000.0, 3000.0, 5000.0, 7000.0, 9000.0}};

  // Back-off monotonicity of the packet choice.
  {
    Rng rng = make_rng(902);
    std::uniform_real_distribution<double> upsr(0.0, 1.0);
    std::uniform_int_distribution<int> ulabel(0, 1);
    int pass = 0;
    for (int i = 0; i < 1000; ++i) {
      std::array<double, kNumPacketSizes> psr{};
      std::array<int, kNumPacketSizes> labels{};
      for (auto& p : psr) p = upsr(rng);
      for (auto& l : labels) l = ulabel(rng);
      int largest_predicted = 0;
      for (int p = 0; p < kNumPacketSizes; ++p)
        if (psr[p] >= 0.5) largest_predicted = p;
      if (choose_packet_size(psr, labels, sizes, rng).size_index <= largest_predicted) ++pass;
    }
    ok = ok && pass == 1000;
    detail += ", backoff-mono " + std::to_string(pass) + "/1000";
  }

  // Balancing, goodput identity, label consistency, genie dominance.
  {
    Rng rng = make_rng(903);
    std::uniform_real_distribution<double> ucap(0.0, 12000.0), upsr(0.0, 1.0);
    std::uniform_int_distribution<int> usize(0, kNumPacketSizes - 1);
    int balance_pass = 0, identity_pass = 0, label_pass = 0, dominance_pass = 0;
    for (int i = 0; i < 1000; ++i) {
      std::vector<GenieRecord> records;
      for (int u = 0; u < 8; ++u) {
        GenieRecord rec;
        rec.user_id = u % 4;
        rec.position = {double(u), double(u), 1.5};
        rec.capacity_bits = ucap(rng);
        records.push_back(rec);
      }
      assign_labels(records, sizes);

      bool labels_ok = true;
      std::size_t ones = 0, zeros = 0;
      for (const auto& rec : records) {
        for (int p = 0; p < kNumPacketSizes; ++p) {
          labels_ok = labels_ok &&
                      rec.labels[p] == (sizes.sizes[p] < rec.capacity_bits ? 1 : 0);
          (rec.labels[p] == 1 ? ones : zeros)++;
        }
      }
      if (labels_ok) ++label_pass;

      if (ones > 0 && zeros > 0) {
        const TrainingSet ts = build_training_set(records, sizes, i);
        long balance = 0;
        for (const auto& fv : ts.rows) balance += fv.label == 1 ? 1 : -1;
        if (std::abs(balance) <= 1) ++balance_pass;
      } else {
        ++balance_pass;  // vacuous draw, no balanced set exists
      }

      const auto genie = allocate_genie(records, sizes);
      const auto random = allocate_random(records, sizes, rng);
      bool identity = true;
      for (const auto& d : genie) identity = identity && d.goodput_bits == d.psr * d.packet_size_bits;
      for (const auto& d : random) identity = identity && d.goodput_bits == d.psr * d.packet_size_bits;
      if (identity) ++identity_pass;

      double genie_sum = 0.0, random_sum = 0.0, learned_sum = 0.0;
      for (const auto& d : genie) genie_sum += d.goodput_bits;
      for (const auto& d : random) random_sum += d.goodput_bits;
      for (const auto& rec : records) {
        std::array<double, kNumPacketSizes> psr{};
        for (auto& p : psr) p = upsr(rng);
        const PacketChoice choice = choose_packet_size(psr, rec.labels, sizes, rng);
        const double size = sizes.sizes[choice.size_index];
        if (transmission_outcome(size, rec.capacity_bits)) learned_sum += size;
      }
      if (random_sum <= genie_sum && learned_sum <= genie_sum) ++dominance_pass;
    }
    ok = ok && balance_pass == 1000 && identity_pass == 1000 && label_pass == 1000 &&
         dominance_pass == 1000;
    detail += ", balance " + std::to_string(balance_pass) + "/1000, identity " +
              std::to_string(identity_pass) + "/1000, labels " + std::to_string(label_pass) +
              "/1000, dominance " + std::to_string(dominance_pass) + "/1000";
  }

  report(9, "invariant property suites", ok, detail);
}

}  // namespace
}  // namespace cranlearn

int main() {
  using namespace cranlearn;

  std::printf("cranlearn acceptance suite\n");
  check_capacity_arithmetic();
  check_overhead_exactness();
  check_genie_against_enumeration();
  check_forest_suite();

  const ExperimentConfig cfg = default_config();
  std::printf("... running the desk-scale pipeline over %zu seeds\n", cfg.seeds.size());
  const RunOutputs outputs = run_experiment(cfg, RunMode::all);
  const MeanTable table = MeanTable::build(outputs.rows);

  check_scheme_ordering(table);
  check_noise_trend(table, cfg.noise_variances);
  check_robustness_bands(table, cfg.density_sweep, cfg.shadow_height_sweep);
  check_determinism();
  check_property_suites();

  if (g_failures == 0)
    std::printf("all criteria passed\n");
  else
    std::printf("%d criteria FAILED\n", g_failures);
  return g_failures;
}
