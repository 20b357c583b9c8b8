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

#ifndef CRANLEARN_PHY_HPP
#define CRANLEARN_PHY_HPP

#include <armadillo>
#include <vector>

#include "cranlearn/channel.hpp"

namespace cranlearn {

enum class CodebookSide { transmit, receive };

/// Fixed grid of unit-norm geometric beams, one per angle step.
struct Codebook {
  CodebookSide side = CodebookSide::transmit;
  double min_deg = -60.0;
  double max_deg = 60.0;
  double step_deg = 3.0;
  std::vector<arma::cx_vec> vectors;

  int size() const { return static_cast<int>(vectors.size()); }
  double angle_of(int index) const { return min_deg + step_deg * index; }
  /// Index of the beam whose boresight is nearest the given azimuth
  /// (clamped to the covered sector).
  int nearest_index(double azimuth_deg) const;
};

struct PhyConfig {
  double tx_power_w = 1e-3;
  double noise_power_w = 1.59e-13;
  double bandwidth_hz = 5e6;
  double tti_s = 1e-3;
  /// Symbol budget per TTI, S = TTI * BW.
  double symbols() const { return tti_s * bandwidth_hz; }
};

/// One steering-vector beam per grid angle over [min_deg, max_deg].
/// Throws std::invalid_argument when the coverage is narrower than one step.
Codebook build_codebook(CodebookSide side, int num_antennas, double step_deg, double min_deg,
                        double max_deg);

/// P_tx * h_pl^2 * |u^H H v|^2.
/// Throws std::invalid_argument on dimension mismatch.
double received_power(const ChannelMatrix& H, const arma::cx_vec& receive_filter,
                      const arma::cx_vec& transmit_beam, double pathloss_amplitude_gain,
                      double tx_power_w);

/// Signal to interference plus noise ratio.
/// Throws std::invalid_argument on negative powers or non-positive noise.
double sinr(double signal_power_w, const std::vector<double>& interference_powers_w,
            double noise_power_w);

/// Shannon bits per TTI: S * log2(1 + gamma).
double transport_capacity(double gamma, double symbols);

/// Success iff packet_size < capacity, strictly.
bool transmission_outcome(double packet_size_bits, double capacity_bits);

/// Joint beam/filter selection: beam[i] indexes the transmit codebook at RRH
/// i, filter[i] the receive codebook at user i.
struct BeamAssignment {
  std::vector<int> beams;
  std::vector<int> filters;
};

/// Per-user transport capacities under a joint assignment, with cross-channel
/// interference only: RRH i serves user i, every other RRH m interferes
/// through user i's filter over the m->i channel.
std::vector<double> system_capacities(const PairChannels& channels, const LinkGains& pathloss,
                                      const Codebook& tx_codebook, const Codebook& rx_codebook,
                                      const BeamAssignment& assignment, const PhyConfig& phy);

/// Precomputed |u^H H v|^2 over all (victim, rrh, beam, filter) tuples,
/// scaled by P_tx and the pairwise pathloss. Shared by the exhaustive search
/// and the capacity evaluation so both see identical arithmetic.
class PowerTable {
 public:
  PowerTable(const PairChannels& channels, const LinkGains& pathloss, const Codebook& tx_codebook,
             const Codebook& rx_codebook, const PhyConfig& phy);

  /// Received power at user `user` from RRH `rrh` transmitting beam `beam`,
  /// through the user's filter `filter`.
  double power(int user, int rrh, int beam, int filter) const {
    return table_[((static_cast<std::size_t>(user) * num_rrhs_ + rrh) * num_beams_ + beam) *
                      num_filters_ +
                  filter];
  }
  int num_users() const { return num_users_; }
  int num_rrhs() const { return num_rrhs_; }
  int num_beams() const { return num_beams_; }
  int num_filters() const { return num_filters_; }

  /// Capacities for a joint assignment, computed from the cached powers.
  std::vector<double> capacities(const BeamAssignment& assignment, const PhyConfig& phy) const;

  /// Sum of the per-user capacities (the search objective), allocation-free.
  double sum_capacity(const BeamAssignment& assignment, const PhyConfig& phy) const;

 private:
  int num_users_ = 0;
  int num_rrhs_ = 0;
  int num_beams_ = 0;
  int num_filters_ = 0;
  std::vector<double> table_;
};

}  // namespace cranlearn

#endif  // CRANLEARN_PHY_HPP
