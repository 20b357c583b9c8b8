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

#include "cranlearn/phy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace cranlearn {

int Codebook::nearest_index(double azimuth_deg) const {
  const double clamped = std::clamp(azimuth_deg, min_deg, max_deg);
  const int idx = static_cast<int>(std::lround((clamped - min_deg) / step_deg));
  return std::clamp(idx, 0, size() - 1);
}

Codebook build_codebook(CodebookSide side, int num_antennas, double step_deg, double min_deg,
                        double max_deg) {
  if (num_antennas < 1) throw std::invalid_argument("codebook: num_antennas must be >= 1");
  if (step_deg <= 0.0) throw std::invalid_argument("codebook: step must be positive");
  if (max_deg - min_deg < step_deg)
    throw std::invalid_argument("codebook: coverage narrower than one step");

  Codebook cb;
  cb.side = side;
  cb.min_deg = min_deg;
  cb.max_deg = max_deg;
  cb.step_deg = step_deg;
  const int count = static_cast<int>(std::floor((max_deg - min_deg) / step_deg)) + 1;
  cb.vectors.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i)
    cb.vectors.push_back(steering_vector(min_deg + step_deg * i, num_antennas));
  return cb;
}

double received_power(const ChannelMatrix& H, const arma::cx_vec& receive_filter,
                      const arma::cx_vec& transmit_beam, double pathloss_amplitude_gain,
                      double tx_power_w) {
  if (receive_filter.n_elem != H.entries.n_rows || transmit_beam.n_elem != H.entries.n_cols)
    throw std::invalid_argument("received_power: dimension mismatch");
  const std::complex<double> coupling =
      arma::as_scalar(receive_filter.t() * H.entries * transmit_beam);
  return tx_power_w * pathloss_amplitude_gain * pathloss_amplitude_gain * std::norm(coupling);
}

double sinr(double signal_power_w, const std::vector<double>& interference_powers_w,
            double noise_power_w) {
  if (noise_power_w <= 0.0) throw std::invalid_argument("sinr: noise power must be positive");
  if (signal_power_w < 0.0) throw std::invalid_argument("sinr: negative signal power");
  double denom = noise_power_w;
  for (double p : interference_powers_w) {
    if (p < 0.0) throw std::invalid_argument("sinr: negative interference power");
    denom += p;
  }
  return signal_power_w / denom;
}

double transport_capacity(double gamma, double symbols) {
  return symbols * std::log2(1.0 + gamma);
}

bool transmission_outcome(double packet_size_bits, double capacity_bits) {
  return packet_size_bits < capacity_bits;
}

std::vector<double> system_capacities(const PairChannels& channels, const LinkGains& pathloss,
                                      const Codebook& tx_codebook, const Codebook& rx_codebook,
                                      const BeamAssignment& assignment, const PhyConfig& phy) {
  const int n = channels.num_users;
  if (static_cast<int>(assignment.beams.size()) != n ||
      static_cast<int>(assignment.filters.size()) != n)
    throw std::invalid_argument("system_capacities: assignment size mismatch");

  std::vector<double> caps(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const arma::cx_vec& u = rx_codebook.vectors[assignment.filters[i]];
    const double signal = received_power(channels.at(i, i), u,
                                         tx_codebook.vectors[assignment.beams[i]],
                                         pathloss.at(i, i), phy.tx_power_w);
    std::vector<double> interference;
    interference.reserve(static_cast<std::size_t>(n - 1));
    for (int m = 0; m < n; ++m) {
      if (m == i) continue;
      interference.push_back(received_power(channels.at(m, i), u,
                                            tx_codebook.vectors[assignment.beams[m]],
                                            pathloss.at(m, i), phy.tx_power_w));
    }
    caps[i] = transport_capacity(sinr(signal, interference, phy.noise_power_w), phy.symbols());
  }
  return caps;
}

PowerTable::PowerTable(const PairChannels& channels, const LinkGains& pathloss,
                       const Codebook& tx_codebook, const Codebook& rx_codebook,
                       const PhyConfig& phy)
    : num_users_(channels.num_users),
      num_rrhs_(channels.num_rrhs),
      num_beams_(tx_codebook.size()),
      num_filters_(rx_codebook.size()) {
  table_.resize(static_cast<std::size_t>(num_users_) * num_rrhs_ * num_beams_ * num_filters_);
  std::size_t k = 0;
  for (int n = 0; n < num_users_; ++n) {
    for (int m = 0; m < num_rrhs_; ++m) {
      const ChannelMatrix& H = channels.at(m, n);
      const double scale =
          phy.tx_power_w * pathloss.at(m, n) * pathloss.at(m, n);
      for (int b = 0; b < num_beams_; ++b) {
        const arma::cx_vec projected = H.entries * tx_codebook.vectors[b];
        for (int f = 0; f < num_filters_; ++f, ++k) {
          const std::complex<double> coupling =
              arma::cdot(rx_codebook.vectors[f], projected);
          table_[k] = scale * std::norm(coupling);
        }
      }
    }
  }
}

std::vector<double> PowerTable::capacities(const BeamAssignment& assignment,
                                           const PhyConfig& phy) const {
  std::vector<double> caps(static_cast<std::size_t>(num_users_));
  for (int i = 0; i < num_users_; ++i) {
    const int f = assignment.filters[i];
    double interference = 0.0;
    for (int m = 0; m < num_rrhs_; ++m) {
      if (m == i) continue;
      interference += power(i, m, assignment.beams[m], f);
    }
    const double gamma = power(i, i, assignment.beams[i], f) / (phy.noise_power_w + interference);
    caps[i] = transport_capacity(gamma, phy.symbols());
  }
  return caps;
}

double PowerTable::sum_capacity(const BeamAssignment& assignment, const PhyConfig& phy) const {
  double sum = 0.0;
  for (int i = 0; i < num_users_; ++i) {
    const int f = assignment.filters[i];
    double interference = 0.0;
    for (int m = 0; m < num_rrhs_; ++m) {
      if (m == i) continue;
      interference += power(i, m, assignment.beams[m], f);
    }
    const double gamma = power(i, i, assignment.beams[i], f) / (phy.noise_power_w + interference);
    sum += transport_capacity(gamma, phy.symbols());
  }
  return sum;
}

}  // namespace cranlearn
