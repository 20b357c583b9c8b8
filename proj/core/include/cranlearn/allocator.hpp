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

#ifndef CRANLEARN_ALLOCATOR_HPP
#define CRANLEARN_ALLOCATOR_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "cranlearn/forest.hpp"
#include "cranlearn/phy.hpp"
#include "cranlearn/scenario.hpp"

namespace cranlearn {

constexpr int kNumPacketSizes = 5;

/// The five discrete packet sizes, strictly increasing, in bits.
struct PacketSizeSet {
  std::array<double, kNumPacketSizes> sizes{};
};

/// One exhaustive-search result: per-user optimal beam/filter under joint
/// sum-capacity maximization, the resulting capacity, and (once packet sizes
/// exist) one success label per packet size.
struct GenieRecord {
  int user_id = 0;
  Vec3 position;
  int beam_index = 0;
  int filter_index = 0;
  double capacity_bits = 0.0;  // C*
  std::array<int, kNumPacketSizes> labels{kNoLabel, kNoLabel, kNoLabel, kNoLabel, kNoLabel};
};

enum class Scheme { learned, random_optimal, random_geometric, genie };

const char* scheme_name(Scheme scheme);

struct AllocationDecision {
  int user_id = 0;
  int beam_index = 0;
  int filter_index = 0;
  double packet_size_bits = 0.0;
  double psr = 0.0;                 // packet success rate in [0, 1]
  double goodput_bits = 0.0;        // psr * packet_size, exactly
  Scheme scheme = Scheme::learned;
  bool backed_off = false;          // false positive triggered the back-off
  bool conservative = false;        // every packet size was predicted to fail
  bool global_nn_fallback = false;  // no training data for this user id
};

struct GenieSearchConfig {
  /// Joint assignments up to this count are enumerated exactly; larger
  /// instances run an iterated best-response sweep with random restarts.
  std::size_t exact_enumeration_limit = 50000;
  int restarts = 3;
  int max_sweeps = 50;
};

/// Joint exhaustive search for the (beam, filter) assignment maximizing the
/// sum transport capacity over all users, with cross-channel interference.
/// Labels are left unset; call assign_labels once packet sizes exist.
/// Throws std::invalid_argument on empty codebooks.
std::vector<GenieRecord> genie_search(const Scenario& scenario, int tti_index,
                                      const PhyConfig& phy, const ChannelConfig& channel_cfg,
                                      const Codebook& tx_codebook, const Codebook& rx_codebook,
                                      const GenieSearchConfig& search = {});

/// Same search over a precomputed power table (positions supply the record
/// metadata). Deterministic in `seed`, which drives the restart draws.
std::vector<GenieRecord> genie_search(const PowerTable& table,
                                      const std::vector<Vec3>& user_positions,
                                      const PhyConfig& phy, const GenieSearchConfig& search,
                                      std::uint64_t seed);

/// Sets labels[p] = 1 iff sizes[p] < capacity (strict), per record.
void assign_labels(std::vector<GenieRecord>& records, const PacketSizeSet& packet_sizes);

/// Packet sizes at the {10,30,50,70,90}% quantiles of the pooled genie
/// capacities, floored to a multiple of 8 bits; collisions are nudged down
/// one 8-bit step to keep the set strictly increasing.
/// Throws std::invalid_argument on degenerate capacity distributions.
PacketSizeSet design_packet_sizes(const std::vector<double>& genie_capacities);

/// Expands records into one labeled row per (record, packet size), then
/// balances classes by uniform random undersampling of the majority class.
/// Optionally caps the row count (cap <= 0 means uncapped), preserving
/// balance. Throws std::invalid_argument when a class is entirely absent.
TrainingSet build_training_set(const std::vector<GenieRecord>& records,
                               const PacketSizeSet& packet_sizes, std::uint64_t seed,
                               std::size_t max_rows = 0);

/// Euclidean nearest neighbor; ties break to the lowest index.
std::size_t match_position(const Vec3& reported, std::span<const Vec3> training_positions);

/// Training-time lookup table for the learned scheme: the positions the
/// genie labeled, their stored resources, and the per-packet-size labels
/// used for false-positive detection.
struct TrainingTable {
  std::vector<GenieRecord> records;                // all labeled records
  std::vector<std::vector<std::size_t>> by_user;   // record indices per user id
  PacketSizeSet packet_sizes;
};

TrainingTable build_training_table(const std::vector<GenieRecord>& records,
                                   const PacketSizeSet& packet_sizes);

/// Pure packet-size selection rule shared by the learned scheme: among the
/// sizes predicted to succeed (votes >= T_n/2) that the training labels
/// confirm, picks the one maximizing psr * size; when every predicted size
/// is a known false positive, backs off below the best one; when nothing is
/// predicted to succeed, falls back to the smallest size.
struct PacketChoice {
  int size_index = 0;
  bool backed_off = false;
  bool conservative = false;
};
PacketChoice choose_packet_size(const std::array<double, kNumPacketSizes>& psr,
                                const std::array<int, kNumPacketSizes>& labels,
                                const PacketSizeSet& packet_sizes, Rng& rng);

/// Uniform draw from the sizes strictly below the false-positive size; a
/// false positive at the smallest size keeps it.
double backoff(int predicted_index, const PacketSizeSet& packet_sizes, Rng& rng);

/// The learned scheme: per user, nearest stored position, its stored beam
/// and filter, forest votes per packet size, false-positive check against
/// the stored labels, and the psr * size selection.
std::vector<AllocationDecision> allocate_learned(const RandomForest& rf,
                                                 const std::vector<Vec3>& reported_positions,
                                                 const std::vector<int>& user_ids,
                                                 const TrainingTable& table, Rng& rng);

/// Baseline: genie beam and filter, uniformly random packet size; psr is the
/// realized outcome against the genie capacity.
std::vector<AllocationDecision> allocate_random(const std::vector<GenieRecord>& records,
                                                const PacketSizeSet& packet_sizes, Rng& rng);

/// Baseline: beam nearest the true AoD and filter nearest the true AoA from
/// the scenario the allocator sees, uniformly random packet size; psr is the
/// realized outcome under the geometric joint assignment.
std::vector<AllocationDecision> allocate_geometric(const Scenario& scenario, int tti_index,
                                                   const PhyConfig& phy,
                                                   const ChannelConfig& channel_cfg,
                                                   const Codebook& tx_codebook,
                                                   const Codebook& rx_codebook,
                                                   const PacketSizeSet& packet_sizes, Rng& rng);

/// Geometric beam/filter selection only (shared with the harness, which
/// evaluates the realized outcome on the true channels).
BeamAssignment geometric_assignment(const Scenario& scenario, const Codebook& tx_codebook,
                                    const Codebook& rx_codebook);

/// Upper bound: the largest packet size strictly below the genie capacity,
/// with psr 1 (or zero goodput when even the smallest size does not fit).
std::vector<AllocationDecision> allocate_genie(const std::vector<GenieRecord>& records,
                                               const PacketSizeSet& packet_sizes);

/// Columnar text serialization for records and training sets so learning
/// runs can be decoupled from channel generation.
void write_genie_records(std::ostream& out, const std::vector<GenieRecord>& records);
std::vector<GenieRecord> read_genie_records(std::istream& in);
void write_training_set(std::ostream& out, const TrainingSet& ts);
TrainingSet read_training_set(std::istream& in);

}  // namespace cranlearn

#endif  // CRANLEARN_ALLOCATOR_HPP
