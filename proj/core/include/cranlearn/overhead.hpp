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

#ifndef CRANLEARN_OVERHEAD_HPP
#define CRANLEARN_OVERHEAD_HPP

namespace cranlearn {

/// TDD frame pilot budget. Subcarrier counts are fractional on purpose: a
/// narrow-band beacon may occupy a fraction of one symbol's subcarriers.
struct FrameConfig {
  double t_sym_total = 42.0;
  double f_sc_total = 833.0;
  double frame_duration_s = 0.2e-3;
  // Position beacon per user. f_sc_pos <= 0 packs all users' beacons into
  // the pilot symbol by frequency division (f_sc_total / num_users each).
  double t_sym_pos = 1.0;
  double f_sc_pos = 0.0;
  // CSI pilot per user: full band, one pilot symbol plus the cyclic-prefix
  // compensation gap to the next pilot.
  double t_sym_csi = 1.0;
  double f_sc_csi = 833.0;
  double csi_pilot_spacing_sym = 1.0;
  // Extra nearby users per RRH whose CSI must also be acquired in the
  // realistic variant (an expected value; fractional allowed).
  double csi_nearby_users_per_rrh = 0.3125;
};

/// System overhead fraction for position acquisition of num_users users.
/// Throws std::invalid_argument when the beacons do not fit in the frame.
double position_overhead(const FrameConfig& cfg, int num_users);

/// System overhead fraction for CSI acquisition of num_users users (each
/// pilot occupies t_sym_csi + csi_pilot_spacing_sym symbols, full band).
/// Throws std::invalid_argument when the pilots exceed the frame, naming the
/// feasible maximum user count.
double csi_overhead(const FrameConfig& cfg, int num_users);

/// CSI overhead including the configured nearby users per RRH.
double csi_overhead_nearby(const FrameConfig& cfg, int num_users);

/// (raw_goodput / tti) * (1 - oh), in bits per second.
/// Throws std::invalid_argument for oh outside [0, 1] or tti <= 0.
double effective_throughput(double raw_goodput_bits_per_tti, double overhead_fraction,
                            double tti_s);

}  // namespace cranlearn

#endif  // CRANLEARN_OVERHEAD_HPP
