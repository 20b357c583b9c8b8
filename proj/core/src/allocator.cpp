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

#include "cranlearn/allocator.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cranlearn {

const char* scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::learned: return "learned";
    case Scheme::random_optimal: return "random_optimal";
    case Scheme::random_geometric: return "random_geometric";
    case Scheme::genie: return "genie";
  }
  return "unknown";
}

namespace {

double objective(const PowerTable& table, const BeamAssignment& assignment,
                 const PhyConfig& phy) {
  return table.sum_capacity(assignment, phy);
}

// Greedy start: each user maximizes its own received signal power.
BeamAssignment greedy_start(const PowerTable& table) {
  BeamAssignment a;
  const int n = table.num_users();
  a.beams.resize(static_cast<std::size_t>(n));
  a.filters.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    double best = -1.0;
    for (int b = 0; b < table.num_beams(); ++b) {
      for (int f = 0; f < table.num_filters(); ++f) {
        const double p = table.power(i, i, b, f);
        if (p > best) {
          best = p;
          a.beams[static_cast<std::size_t>(i)] = b;
          a.filters[static_cast<std::size_t>(i)] = f;
        }
      }
    }
  }
  return a;
}

// Coordinate ascent on the sum capacity: each user in turn re-picks its
// (beam, filter) to maximize the joint objective with the others fixed.
double best_response(const PowerTable& table, const PhyConfig& phy, BeamAssignment& assignment,
                     int max_sweeps) {
  const int n = table.num_users();
  double current = objective(table, assignment, phy);
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      int best_b = assignment.beams[static_cast<std::size_t>(i)];
      int best_f = assignment.filters[static_cast<std::size_t>(i)];
      double best_obj = current;
      for (int b = 0; b < table.num_beams(); ++b) {
        for (int f = 0; f < table.num_filters(); ++f) {
          assignment.beams[static_cast<std::size_t>(i)] = b;
          assignment.filters[static_cast<std::size_t>(i)] = f;
          const double obj = objective(table, assignment, phy);
          if (obj > best_obj) {
            best_obj = obj;
            best_b = b;
            best_f = f;
          }
        }
      }
      if (best_obj > current) {
        changed = true;
        current = best_obj;
      }
      assignment.beams[static_cast<std::size_t>(i)] = best_b;
      assignment.filters[static_cast<std::size_t>(i)] = best_f;
    }
    if (!changed) break;
  }
  return current;
}

BeamAssignment decode_assignment(std::uint64_t code, int num_users, int num_beams,
                                 int num_filters) {
  BeamAssignment a;
  a.beams.resize(static_cast<std::size_t>(num_users));
  a.filters.resize(static_cast<std::size_t>(num_users));
  const std::uint64_t per_user = static_cast<std::uint64_t>(num_beams) * num_filters;
  for (int i = num_users - 1; i >= 0; --i) {
    const std::uint64_t c = code % per_user;
    code /= per_user;
    a.beams[static_cast<std::size_t>(i)] = static_cast<int>(c / num_filters);
    a.filters[static_cast<std::size_t>(i)] = static_cast<int>(c % num_filters);
  }
  return a;
}

}  // namespace

std::vector<GenieRecord> genie_search(const PowerTable& table,
                                      const std::vector<Vec3>& user_positions,
                                      const PhyConfig& phy, const GenieSearchConfig& search,
                                      std::uint64_t seed) {
  if (table.num_beams() == 0 || table.num_filters() == 0)
    throw std::invalid_argument("genie_search: empty codebook");
  const int n = table.num_users();
  if (static_cast<int>(user_positions.size()) != n)
    throw std::invalid_argument("genie_search: position count mismatch");

  const std::uint64_t per_user = static_cast<std::uint64_t>(table.num_beams()) *
                                 static_cast<std::uint64_t>(table.num_filters());
  // Joint assignment count, saturating to avoid overflow.
  std::uint64_t joint = 1;
  for (int i = 0; i < n; ++i) {
    if (joint > search.exact_enumeration_limit) break;
    joint *= per_user;
  }

  BeamAssignment best_assignment;
  if (joint <= search.exact_enumeration_limit) {
    double best_obj = -std::numeric_limits<double>::infinity();
    for (std::uint64_t code = 0; code < joint; ++code) {
      BeamAssignment a = decode_assignment(code, n, table.num_beams(), table.num_filters());
      const double obj = objective(table, a, phy);
      if (obj > best_obj) {
        best_obj = obj;
        best_assignment = std::move(a);
      }
    }
  } else {
    Rng rng = make_rng(seed);
    std::uniform_int_distribution<int> pick_beam(0, table.num_beams() - 1);
    std::uniform_int_distribution<int> pick_filter(0, table.num_filters() - 1);
    double best_obj = -std::numeric_limits<double>::infinity();
    for (int r = 0; r < std::max(1, search.restarts); ++r) {
      BeamAssignment a;
      if (r == 0) {
        a = greedy_start(table);
      } else {
        a.beams.resize(static_cast<std::size_t>(n));
        a.filters.resize(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
          a.beams[static_cast<std::size_t>(i)] = pick_beam(rng);
          a.filters[static_cast<std::size_t>(i)] = pick_filter(rng);
        }
      }
      const double obj = best_response(table, phy, a, search.max_sweeps);
      if (obj > best_obj) {
        best_obj = obj;
        best_assignment = std::move(a);
      }
    }
  }

  const std::vector<double> caps = table.capacities(best_assignment, phy);
  std::vector<GenieRecord> records;
  records.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    GenieRecord rec;
    rec.user_id = i;
    rec.position = user_positions[static_cast<std::size_t>(i)];
    rec.beam_index = best_assignment.beams[static_cast<std::size_t>(i)];
    rec.filter_index = best_assignment.filters[static_cast<std::size_t>(i)];
    rec.capacity_bits = caps[static_cast<std::size_t>(i)];
    records.push_back(rec);
  }
  return records;
}

std::vector<GenieRecord> genie_search(const Scenario& scenario, int tti_index,
                                      const PhyConfig& phy, const ChannelConfig& channel_cfg,
                                      const Codebook& tx_codebook, const Codebook& rx_codebook,
                                      const GenieSearchConfig& search) {
  const Scenario now = tti_index == 0 ? scenario : advance(scenario, tti_index);
  const PairChannels channels = compute_pair_channels(now, 0, channel_cfg);
  const LinkGains gains = compute_pathloss_gains(now, 0, channel_cfg.pathloss);
  const PowerTable table(channels, gains, tx_codebook, rx_codebook, phy);
  std::vector<Vec3> positions;
  positions.reserve(now.users.size());
  for (const auto& u : now.users) positions.push_back(u.position);
  const std::uint64_t seed =
      derive_seed(now.rng_seed, rng_stream::kGenieRestart, static_cast<std::uint64_t>(tti_index));
  auto records = genie_search(table, positions, phy, search, seed);
  for (std::size_t i = 0; i < records.size(); ++i) records[i].user_id = now.users[i].id;
  return records;
}

void assign_labels(std::vector<GenieRecord>& records, const PacketSizeSet& packet_sizes) {
  for (auto& rec : records)
    for (int p = 0; p < kNumPacketSizes; ++p)
      rec.labels[static_cast<std::size_t>(p)] =
          packet_sizes.sizes[static_cast<std::size_t>(p)] < rec.capacity_bits ? 1 : 0;
}

PacketSizeSet design_packet_sizes(const std::vector<double>& genie_capacities) {
  std::vector<double> pool = genie_capacities;
  std::sort(pool.begin(), pool.end());
  std::vector<double> distinct_positive;
  for (double c : pool)
    if (c > 0.0 && (distinct_positive.empty() || c != distinct_positive.back()))
      distinct_positive.push_back(c);
  if (distinct_positive.size() < kNumPacketSizes)
    throw std::invalid_argument(
        "design_packet_sizes: need at least 5 distinct positive capacities, got " +
        std::to_string(distinct_positive.size()));

  const std::array<double, kNumPacketSizes> quantiles{0.1, 0.3, 0.5, 0.7, 0.9};
  PacketSizeSet ps;
  const std::size_t n = pool.size();
  for (int p = 0; p < kNumPacketSizes; ++p) {
    const double h = static_cast<double>(n - 1) * quantiles[static_cast<std::size_t>(p)];
    const std::size_t lo = static_cast<std::size_t>(std::floor(h));
    const std::size_t hi = std::min(lo + 1, n - 1);
    const double q = pool[lo] + (h - static_cast<double>(lo)) * (pool[hi] - pool[lo]);
    ps.sizes[static_cast<std::size_t>(p)] = std::floor(q / 8.0) * 8.0;
  }
  // Nudge colliding sizes down one 8-bit step, keeping the set strictly
  // increasing from the top.
  for (int p = kNumPacketSizes - 2; p >= 0; --p)
    if (ps.sizes[static_cast<std::size_t>(p)] >= ps.sizes[static_cast<std::size_t>(p + 1)])
      ps.sizes[static_cast<std::size_t>(p)] = ps.sizes[static_cast<std::size_t>(p + 1)] - 8.0;
  if (ps.sizes[0] <= 0.0)
    throw std::invalid_argument("design_packet_sizes: degenerate capacity distribution");
  return ps;
}

TrainingSet build_training_set(const std::vector<GenieRecord>& records,
                               const PacketSizeSet& packet_sizes, std::uint64_t seed,
                               std::size_t max_rows) {
  if (records.empty()) throw std::invalid_argument("build_training_set: no records");

  std::vector<FeatureVector> all;
  all.reserve(records.size() * kNumPacketSizes);
  for (const auto& rec : records) {
    for (int p = 0; p < kNumPacketSizes; ++p) {
      FeatureVector fv;
      fv.user_id = rec.user_id;
      fv.pos = rec.position;
      fv.beam_index = rec.beam_index;
      fv.filter_index = rec.filter_index;
      fv.packet_size_bits = packet_sizes.sizes[static_cast<std::size_t>(p)];
      fv.label = rec.labels[static_cast<std::size_t>(p)];
      if (fv.label == kNoLabel)
        throw std::invalid_argument("build_training_set: record labels not assigned");
      all.push_back(fv);
    }
  }

  std::vector<std::size_t> zeros, ones;
  for (std::size_t i = 0; i < all.size(); ++i) (all[i].label == 1 ? ones : zeros).push_back(i);
  if (zeros.empty() || ones.empty())
    throw std::invalid_argument("build_training_set: class absent (" +
                                std::to_string(zeros.size()) + " zeros, " +
                                std::to_string(ones.size()) + " ones); widen the packet size set");

  std::size_t target = std::min(zeros.size(), ones.size());
  if (max_rows > 0) target = std::min(target, max_rows / 2);
  if (target == 0) throw std::invalid_argument("build_training_set: row cap too small");

  Rng rng = make_rng(derive_seed(seed, rng_stream::kBalance));
  auto subsample = [&](std::vector<std::size_t>& cls) {
    if (cls.size() <= target) return;
    std::shuffle(cls.begin(), cls.end(), rng);
    cls.resize(target);
    std::sort(cls.begin(), cls.end());
  };
  subsample(zeros);
  subsample(ones);

  std::vector<bool> keep(all.size(), false);
  for (std::size_t i : zeros) keep[i] = true;
  for (std::size_t i : ones) keep[i] = true;

  TrainingSet ts;
  ts.rows.reserve(zeros.size() + ones.size());
  for (std::size_t i = 0; i < all.size(); ++i)
    if (keep[i]) ts.rows.push_back(all[i]);
  return ts;
}

std::size_t match_position(const Vec3& reported, std::span<const Vec3> training_positions) {
  if (training_positions.empty())
    throw std::invalid_argument("match_position: no training positions");
  std::size_t best = 0;
  double best_d = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < training_positions.size(); ++i) {
    const double d = distance(reported, training_positions[i]);
    if (d < best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

TrainingTable build_training_table(const std::vector<GenieRecord>& records,
                                   const PacketSizeSet& packet_sizes) {
  TrainingTable table;
  table.records = records;
  table.packet_sizes = packet_sizes;
  int max_user = -1;
  for (const auto& rec : records) max_user = std::max(max_user, rec.user_id);
  table.by_user.resize(static_cast<std::size_t>(max_user + 1));
  for (std::size_t i = 0; i < records.size(); ++i)
    table.by_user[static_cast<std::size_t>(records[i].user_id)].push_back(i);
  return table;
}

namespace {

int backoff_index(int false_positive_index, Rng& rng) {
  if (false_positive_index <= 0) return 0;
  std::uniform_int_distribution<int> pick(0, false_positive_index - 1);
  return pick(rng);
}

}  // namespace

double backoff(int predicted_index, const PacketSizeSet& packet_sizes, Rng& rng) {
  if (predicted_index < 0 || predicted_index >= kNumPacketSizes)
    throw std::invalid_argument("backoff: index out of range");
  return packet_sizes.sizes[static_cast<std::size_t>(backoff_index(predicted_index, rng))];
}

PacketChoice choose_packet_size(const std::array<double, kNumPacketSizes>& psr,
                                const std::array<int, kNumPacketSizes>& labels,
                                const PacketSizeSet& packet_sizes, Rng& rng) {
  auto argmax_product = [&](auto&& include) {
    int best = -1;
    double best_product = -1.0;
    for (int p = 0; p < kNumPacketSizes; ++p) {
      if (!include(p)) continue;
      const double product =
          psr[static_cast<std::size_t>(p)] * packet_sizes.sizes[static_cast<std::size_t>(p)];
      if (product > best_product) {
        best_product = product;
        best = p;
      }
    }
    return best;
  };

  const auto predicted = [&](int p) { return psr[static_cast<std::size_t>(p)] >= 0.5; };

  PacketChoice choice;
  const int best_confirmed =
      argmax_product([&](int p) { return predicted(p) && labels[static_cast<std::size_t>(p)] == 1; });
  if (best_confirmed >= 0) {
    choice.size_index = best_confirmed;
    return choice;
  }

  const int best_predicted = argmax_product(predicted);
  if (best_predicted < 0) {
    // Nothing predicted to succeed: full-buffer operation still transmits
    // the smallest size.
    choice.size_index = 0;
    choice.conservative = true;
    return choice;
  }

  // Every predicted size is a known false positive: back off below the best.
  choice.size_index = backoff_index(best_predicted, rng);
  choice.backed_off = true;
  return choice;
}

std::vector<AllocationDecision> allocate_learned(const RandomForest& rf,
                                                 const std::vector<Vec3>& reported_positions,
                                                 const std::vector<int>& user_ids,
                                                 const TrainingTable& table, Rng& rng) {
  if (reported_positions.size() != user_ids.size())
    throw std::invalid_argument("allocate_learned: positions/ids size mismatch");
  if (table.records.empty()) throw std::invalid_argument("allocate_learned: empty training table");

  std::vector<AllocationDecision> decisions;
  decisions.reserve(reported_positions.size());

  for (std::size_t k = 0; k < reported_positions.size(); ++k) {
    const int user_id = user_ids[k];
    const Vec3& reported = reported_positions[k];

    bool fallback = false;
    const std::vector<std::size_t>* indices = nullptr;
    if (user_id >= 0 && user_id < static_cast<int>(table.by_user.size()) &&
        !table.by_user[static_cast<std::size_t>(user_id)].empty()) {
      indices = &table.by_user[static_cast<std::size_t>(user_id)];
    } else {
      fallback = true;
    }

    const GenieRecord* rec = nullptr;
    if (fallback) {
      std::vector<Vec3> positions;
      positions.reserve(table.records.size());
      for (const auto& r : table.records) positions.push_back(r.position);
      rec = &table.records[match_position(reported, positions)];
    } else {
      std::vector<Vec3> positions;
      positions.reserve(indices->size());
      for (std::size_t i : *indices) positions.push_back(table.records[i].position);
      rec = &table.records[(*indices)[match_position(reported, positions)]];
    }

    std::array<double, kNumPacketSizes> psr{};
    for (int p = 0; p < kNumPacketSizes; ++p) {
      FeatureVector fv;
      fv.user_id = user_id;
      fv.pos = rec->position;
      fv.beam_index = rec->beam_index;
      fv.filter_index = rec->filter_index;
      fv.packet_size_bits = table.packet_sizes.sizes[static_cast<std::size_t>(p)];
      psr[static_cast<std::size_t>(p)] =
          static_cast<double>(votes(rf, fv)) / static_cast<double>(rf.num_trees);
    }

    const PacketChoice choice = choose_packet_size(psr, rec->labels, table.packet_sizes, rng);

    AllocationDecision d;
    d.user_id = user_id;
    d.beam_index = rec->beam_index;
    d.filter_index = rec->filter_index;
    d.packet_size_bits = table.packet_sizes.sizes[static_cast<std::size_t>(choice.size_index)];
    d.psr = psr[static_cast<std::size_t>(choice.size_index)];
    d.goodput_bits = d.psr * d.packet_size_bits;
    d.scheme = Scheme::learned;
    d.backed_off = choice.backed_off;
    d.conservative = choice.conservative;
    d.global_nn_fallback = fallback;
    decisions.push_back(d);
  }
  return decisions;
}

std::vector<AllocationDecision> allocate_random(const std::vector<GenieRecord>& records,
                                                const PacketSizeSet& packet_sizes, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, kNumPacketSizes - 1);
  std::vector<AllocationDecision> decisions;
  decisions.reserve(records.size());
  for (const auto& rec : records) {
    const int p = pick(rng);
    const double size = packet_sizes.sizes[static_cast<std::size_t>(p)];
    AllocationDecision d;
    d.user_id = rec.user_id;
    d.beam_index = rec.beam_index;
    d.filter_index = rec.filter_index;
    d.packet_size_bits = size;
    d.psr = transmission_outcome(size, rec.capacity_bits) ? 1.0 : 0.0;
    d.goodput_bits = d.psr * size;
    d.scheme = Scheme::random_optimal;
    decisions.push_back(d);
  }
  return decisions;
}

BeamAssignment geometric_assignment(const Scenario& scenario, const Codebook& tx_codebook,
                                    const Codebook& rx_codebook) {
  BeamAssignment a;
  a.beams.reserve(scenario.users.size());
  a.filters.reserve(scenario.users.size());
  for (const auto& u : scenario.users) {
    const LinkGeometry geo = geometry(scenario, u.serving_rrh, u.id);
    a.beams.push_back(tx_codebook.nearest_index(geo.azimuth_aod_deg));
    a.filters.push_back(rx_codebook.nearest_index(geo.azimuth_aoa_deg));
  }
  return a;
}

std::vector<AllocationDecision> allocate_geometric(const Scenario& scenario, int tti_index,
                                                   const PhyConfig& phy,
                                                   const ChannelConfig& channel_cfg,
                                                   const Codebook& tx_codebook,
                                                   const Codebook& rx_codebook,
                                                   const PacketSizeSet& packet_sizes, Rng& rng) {
  const Scenario now = tti_index == 0 ? scenario : advance(scenario, tti_index);
  const BeamAssignment assignment = geometric_assignment(now, tx_codebook, rx_codebook);
  const PairChannels channels = compute_pair_channels(now, 0, channel_cfg);
  const LinkGains gains = compute_pathloss_gains(now, 0, channel_cfg.pathloss);
  const std::vector<double> caps =
      system_capacities(channels, gains, tx_codebook, rx_codebook, assignment, phy);

  std::uniform_int_distribution<int> pick(0, kNumPacketSizes - 1);
  std::vector<AllocationDecision> decisions;
  decisions.reserve(now.users.size());
  for (std::size_t i = 0; i < now.users.size(); ++i) {
    const int p = pick(rng);
    const double size = packet_sizes.sizes[static_cast<std::size_t>(p)];
    AllocationDecision d;
    d.user_id = now.users[i].id;
    d.beam_index = assignment.beams[i];
    d.filter_index = assignment.filters[i];
    d.packet_size_bits = size;
    d.psr = transmission_outcome(size, caps[i]) ? 1.0 : 0.0;
    d.goodput_bits = d.psr * size;
    d.scheme = Scheme::random_geometric;
    decisions.push_back(d);
  }
  return decisions;
}

std::vector<AllocationDecision> allocate_genie(const std::vector<GenieRecord>& records,
                                               const PacketSizeSet& packet_sizes) {
  std::vector<AllocationDecision> decisions;
  decisions.reserve(records.size());
  for (const auto& rec : records) {
    int best = -1;
    for (int p = 0; p < kNumPacketSizes; ++p)
      if (transmission_outcome(packet_sizes.sizes[static_cast<std::size_t>(p)],
                               rec.capacity_bits))
        best = p;
    AllocationDecision d;
    d.user_id = rec.user_id;
    d.beam_index = rec.beam_index;
    d.filter_index = rec.filter_index;
    d.scheme = Scheme::genie;
    if (best >= 0) {
      d.packet_size_bits = packet_sizes.sizes[static_cast<std::size_t>(best)];
      d.psr = 1.0;
    } else {
      d.packet_size_bits = packet_sizes.sizes[0];
      d.psr = 0.0;
    }
    d.goodput_bits = d.psr * d.packet_size_bits;
    decisions.push_back(d);
  }
  return decisions;
}

void write_genie_records(std::ostream& out, const std::vector<GenieRecord>& records) {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "user_id x y z beam filter capacity_bits y1 y2 y3 y4 y5\n";
  for (const auto& rec : records) {
    out << rec.user_id << ' ' << rec.position.x << ' ' << rec.position.y << ' ' << rec.position.z
        << ' ' << rec.beam_index << ' ' << rec.filter_index << ' ' << rec.capacity_bits;
    for (int label : rec.labels) out << ' ' << label;
    out << '\n';
  }
}

std::vector<GenieRecord> read_genie_records(std::istream& in) {
  std::string header;
  std::getline(in, header);
  if (header != "user_id x y z beam filter capacity_bits y1 y2 y3 y4 y5")
    throw std::runtime_error("genie records: unexpected header");
  std::vector<GenieRecord> records;
  GenieRecord rec;
  while (in >> rec.user_id >> rec.position.x >> rec.position.y >> rec.position.z >>
         rec.beam_index >> rec.filter_index >> rec.capacity_bits >> rec.labels[0] >>
         rec.labels[1] >> rec.labels[2] >> rec.labels[3] >> rec.labels[4])
    records.push_back(rec);
  return records;
}

void write_training_set(std::ostream& out, const TrainingSet& ts) {
  out.precision(std::numeric_limits<double>::max_digits10);
  out << "user_id x y z beam filter packet_size_bits label\n";
  for (const auto& fv : ts.rows) {
    out << fv.user_id << ' ' << fv.pos.x << ' ' << fv.pos.y << ' ' << fv.pos.z << ' '
        << fv.beam_index << ' ' << fv.filter_index << ' ' << fv.packet_size_bits << ' '
        << fv.label << '\n';
  }
}

TrainingSet read_training_set(std::istream& in) {
  std::string header;
  std::getline(in, header);
  if (header != "user_id x y z beam filter packet_size_bits label")
    throw std::runtime_error("training set: unexpected header");
  TrainingSet ts;
  FeatureVector fv;
  while (in >> fv.user_id >> fv.pos.x >> fv.pos.y >> fv.pos.z >> fv.beam_index >>
         fv.filter_index >> fv.packet_size_bits >> fv.label)
    ts.rows.push_back(fv);
  return ts;
}

}  // namespace cranlearn
