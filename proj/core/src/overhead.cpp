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

#include "cranlearn/overhead.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace cranlearn {

namespace {

void validate_frame(const FrameConfig& cfg) {
  if (cfg.t_sym_total <= 0.0 || cfg.f_sc_total <= 0.0)
    throw std::invalid_argument("frame: totals must be positive");
  if (cfg.t_sym_pos < 0.0 || cfg.f_sc_pos < 0.0 || cfg.t_sym_csi < 0.0 || cfg.f_sc_csi < 0.0 ||
      cfg.csi_pilot_spacing_sym < 0.0 || cfg.csi_nearby_users_per_rrh < 0.0)
    throw std::invalid_argument("frame: pilot extents must be >= 0");
  if (cfg.t_sym_pos > cfg.t_sym_total || cfg.t_sym_csi > cfg.t_sym_total ||
      cfg.f_sc_csi > cfg.f_sc_total)
    throw std::invalid_argument("frame: pilot exceeds the frame");
}

double csi_overhead_for(const FrameConfig& cfg, double users_with_csi) {
  const double sym_per_user = cfg.t_sym_csi + cfg.csi_pilot_spacing_sym;
  const double total_sym = sym_per_user * users_with_csi;
  if (total_sym > cfg.t_sym_total) {
    const int max_users = static_cast<int>(std::floor(cfg.t_sym_total / sym_per_user));
    throw std::invalid_argument("csi_overhead: pilots exceed the frame; at most " +
                                std::to_string(max_users) + " users fit");
  }
  const double per_user =
      (sym_per_user * cfg.f_sc_csi) / (cfg.t_sym_total * cfg.f_sc_total);
  return per_user * users_with_csi;
}

}  // namespace

double position_overhead(const FrameConfig& cfg, int num_users) {
  if (num_users < 1) throw std::invalid_argument("position_overhead: num_users must be >= 1");
  validate_frame(cfg);
  // Default packing: all beacons share the pilot symbol by frequency
  // division, so the system total never exceeds that symbol's resource.
  const double f_sc =
      cfg.f_sc_pos > 0.0 ? cfg.f_sc_pos : cfg.f_sc_total / static_cast<double>(num_users);
  if (f_sc > cfg.f_sc_total)
    throw std::invalid_argument("position_overhead: beacon exceeds the frame bandwidth");
  if (cfg.f_sc_pos > 0.0 && cfg.f_sc_pos * num_users > cfg.f_sc_total * cfg.t_sym_pos)
    throw std::invalid_argument("position_overhead: beacons exceed the pilot symbol");
  const double per_user = (cfg.t_sym_pos * f_sc) / (cfg.t_sym_total * cfg.f_sc_total);
  return per_user * static_cast<double>(num_users);
}

double csi_overhead(const FrameConfig& cfg, int num_users) {
  if (num_users < 1) throw std::invalid_argument("csi_overhead: num_users must be >= 1");
  validate_frame(cfg);
  return csi_overhead_for(cfg, static_cast<double>(num_users));
}

double csi_overhead_nearby(const FrameConfig& cfg, int num_users) {
  if (num_users < 1) throw std::invalid_argument("csi_overhead: num_users must be >= 1");
  validate_frame(cfg);
  return csi_overhead_for(cfg,
                          static_cast<double>(num_users) * (1.0 + cfg.csi_nearby_users_per_rrh));
}

double effective_throughput(double raw_goodput_bits_per_tti, double overhead_fraction,
                            double tti_s) {
  if (overhead_fraction < 0.0 || overhead_fraction > 1.0)
    throw std::invalid_argument("effective_throughput: overhead outside [0, 1]");
  if (tti_s <= 0.0) throw std::invalid_argument("effective_throughput: tti must be positive");
  return raw_goodput_bits_per_tti / tti_s * (1.0 - overhead_fraction);
}

}  // namespace cranlearn
