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

#include "cranlearn/channel.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace cranlearn {

namespace {
constexpr double kSpeedOfLight = 299792458.0;
}

double PathlossModel::wavelength_m() const { return kSpeedOfLight / carrier_hz; }

double pathloss_gain(double distance_m, const PathlossModel& model) {
  if (distance_m <= 0.0) throw std::domain_error("pathloss_gain: distance must be positive");
  return model.wavelength_m() / (4.0 * kPi * distance_m);
}

double shadow_penalty(bool blocked, double object_height_m, const ShadowPenaltyConfig& config) {
  if (!blocked) return 1.0;
  double attenuation_db =
      config.base_db + config.slope_db_per_m * (object_height_m - config.ref_height_m);
  attenuation_db = std::clamp(attenuation_db, 0.0, config.max_db);
  return std::pow(10.0, -attenuation_db / 20.0);
}

arma::cx_vec steering_vector(double azimuth_deg, int num_antennas) {
  arma::cx_vec v(static_cast<arma::uword>(num_antennas));
  const double s = std::sin(deg_to_rad(azimuth_deg));
  const double scale = 1.0 / std::sqrt(static_cast<double>(num_antennas));
  for (int m = 0; m < num_antennas; ++m) {
    const double phase = kPi * static_cast<double>(m) * s;
    v(static_cast<arma::uword>(m)) = std::polar(scale, phase);
  }
  return v;
}

ChannelMatrix channel_matrix(const Scenario& scenario, int rrh_id, int user_id, int tti_index,
                             const ChannelConfig& config) {
  const Scenario now = tti_index == 0 ? scenario : advance(scenario, tti_index);
  const LinkGeometry geo = geometry(now, rrh_id, user_id);

  const Rrh* rrh = nullptr;
  const User* user = nullptr;
  for (const auto& r : now.rrhs)
    if (r.id == rrh_id) rrh = &r;
  for (const auto& u : now.users)
    if (u.id == user_id) user = &u;
  if (rrh == nullptr) throw std::out_of_range("channel_matrix: unknown rrh id");
  if (user == nullptr) throw std::out_of_range("channel_matrix: unknown user id");

  ChannelMatrix cm;
  cm.rrh = rrh_id;
  cm.user = user_id;
  cm.tti_index = tti_index;
  cm.entries.zeros(static_cast<arma::uword>(user->num_antennas),
                   static_cast<arma::uword>(rrh->num_antennas));

  const double lambda = config.pathloss.wavelength_m();
  const double heading = user_heading_deg(*user);
  int num_rays = 0;

  // LOS ray, unit relative amplitude, shadow-attenuated when blocked.
  {
    double blocker_height = 0.0;
    for (const auto& obj : geo.los_blocked_by) blocker_height = std::max(blocker_height, obj.height_m);
    const double amp =
        shadow_penalty(!geo.los_blocked_by.empty(), blocker_height, config.shadow);
    const std::complex<double> gain = std::polar(amp, -2.0 * kPi * geo.distance_m / lambda);
    cm.entries += gain * steering_vector(geo.azimuth_aoa_deg, user->num_antennas) *
                  steering_vector(geo.azimuth_aod_deg, rrh->num_antennas).t();
    ++num_rays;
  }

  // Single-bounce rays, one per scatterer.
  const auto& field = now.scatterers;
  for (std::size_t s = 0; s < field.points.size(); ++s) {
    const Vec3& p = field.points[s];
    const double d1 = distance(rrh->position, p);
    const double d2 = distance(p, user->position);
    if (d1 <= 0.0 || d2 <= 0.0) continue;
    const double amp = field.reflection_gains[s] * geo.distance_m / (d1 + d2);
    const std::complex<double> gain = std::polar(amp, -2.0 * kPi * (d1 + d2) / lambda);
    const double aod = relative_azimuth_deg(rrh->position, p, rrh->boresight_azimuth_deg);
    const double aoa = relative_azimuth_deg(user->position, p, heading);
    cm.entries += gain * steering_vector(aoa, user->num_antennas) *
                  steering_vector(aod, rrh->num_antennas).t();
    ++num_rays;
  }

  cm.outage = num_rays == 0;
  return cm;
}

PairChannels compute_pair_channels(const Scenario& scenario, int tti_index,
                                   const ChannelConfig& config) {
  const Scenario now = tti_index == 0 ? scenario : advance(scenario, tti_index);
  PairChannels out;
  out.num_rrhs = static_cast<int>(now.rrhs.size());
  out.num_users = static_cast<int>(now.users.size());
  out.mats.reserve(static_cast<std::size_t>(out.num_rrhs) * out.num_users);
  for (const auto& r : now.rrhs)
    for (const auto& u : now.users) out.mats.push_back(channel_matrix(now, r.id, u.id, 0, config));
  return out;
}

LinkGains compute_pathloss_gains(const Scenario& scenario, int tti_index,
                                 const PathlossModel& model) {
  const Scenario now = tti_index == 0 ? scenario : advance(scenario, tti_index);
  LinkGains out;
  out.num_rrhs = static_cast<int>(now.rrhs.size());
  out.num_users = static_cast<int>(now.users.size());
  out.gains.reserve(static_cast<std::size_t>(out.num_rrhs) * out.num_users);
  for (const auto& r : now.rrhs)
    for (const auto& u : now.users)
      out.gains.push_back(pathloss_gain(distance(r.position, u.position), model));
  return out;
}

void write_channel_dump(std::ostream& out, const PairChannels& channels) {
  out << "rrh user tti rx tx re im\n";
  for (const auto& cm : channels.mats)
    for (arma::uword i = 0; i < cm.entries.n_rows; ++i)
      for (arma::uword j = 0; j < cm.entries.n_cols; ++j)
        out << cm.rrh << ' ' << cm.user << ' ' << cm.tti_index << ' ' << i << ' ' << j << ' '
            << cm.entries(i, j).real() << ' ' << cm.entries(i, j).imag() << '\n';
}

}  // namespace cranlearn
