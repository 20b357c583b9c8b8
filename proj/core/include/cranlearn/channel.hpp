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

#ifndef CRANLEARN_CHANNEL_HPP
#define CRANLEARN_CHANNEL_HPP

#include <armadillo>
#include <complex>
#include <iosfwd>
#include <vector>

#include "cranlearn/scenario.hpp"

namespace cranlearn {

/// Narrowband channel matrix for one RRH-user pair at one TTI. Entries are
/// relative to a unit-amplitude LOS ray; the distance pathloss is applied
/// separately in the link budget.
struct ChannelMatrix {
  arma::cx_mat entries;  // num user antennas x num RRH antennas
  int rrh = 0;
  int user = 0;
  int tti_index = 0;
  bool outage = false;   // no ray reached the receiver
};

/// Free-space LOS pathloss, returned as an amplitude gain.
struct PathlossModel {
  double carrier_hz = 3.5e9;
  double wavelength_m() const;
};

/// Attenuation law for a blocked LOS ray: base_db at ref_height_m, growing
/// by slope_db_per_m, clamped at max_db.
struct ShadowPenaltyConfig {
  double base_db = 10.0;
  double ref_height_m = 1.5;
  double slope_db_per_m = 2.0;
  double max_db = 30.0;
};

struct ChannelConfig {
  PathlossModel pathloss;
  ShadowPenaltyConfig shadow;
};

/// Friis free-space amplitude gain lambda/(4 pi d).
/// Throws std::domain_error for d <= 0.
double pathloss_gain(double distance_m, const PathlossModel& model);

/// Amplitude factor applied to the LOS ray when a shadow object blocks it.
double shadow_penalty(bool blocked, double object_height_m, const ShadowPenaltyConfig& config);

/// Unit-norm steering vector of a half-wavelength ULA, broadside at 0 deg.
arma::cx_vec steering_vector(double azimuth_deg, int num_antennas);

/// Synthesizes the channel for (rrh, user) after advancing the scenario by
/// tti_index TTIs: a unit-amplitude LOS ray (shadow-attenuated when blocked)
/// plus one single-bounce ray per scatterer with amplitude
/// gain * d_los / (d1 + d2) and phase from the path length.
ChannelMatrix channel_matrix(const Scenario& scenario, int rrh_id, int user_id, int tti_index,
                             const ChannelConfig& config);

/// All RRH-to-user channels for one TTI, indexed as at(rrh_index, user_index).
struct PairChannels {
  int num_rrhs = 0;
  int num_users = 0;
  std::vector<ChannelMatrix> mats;
  const ChannelMatrix& at(int rrh_index, int user_index) const {
    return mats[static_cast<std::size_t>(rrh_index) * num_users + user_index];
  }
};

PairChannels compute_pair_channels(const Scenario& scenario, int tti_index,
                                   const ChannelConfig& config);

/// Pathloss amplitude gains for every RRH-user pair, same indexing.
struct LinkGains {
  int num_rrhs = 0;
  int num_users = 0;
  std::vector<double> gains;
  double at(int rrh_index, int user_index) const {
    return gains[static_cast<std::size_t>(rrh_index) * num_users + user_index];
  }
};

LinkGains compute_pathloss_gains(const Scenario& scenario, int tti_index,
                                 const PathlossModel& model);

/// Debug dump: one line per matrix entry with
/// "rrh user tti rx_antenna tx_antenna re im" columns.
void write_channel_dump(std::ostream& out, const PairChannels& channels);

}  // namespace cranlearn

#endif  // CRANLEARN_CHANNEL_HPP
