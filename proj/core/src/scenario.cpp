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

#include "cranlearn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "cranlearn/rng.hpp"

namespace cranlearn {

namespace {

const Rrh& find_rrh(const Scenario& scn, int rrh_id) {
  for (const auto& r : scn.rrhs)
    if (r.id == rrh_id) return r;
  throw std::out_of_range("unknown rrh id " + std::to_string(rrh_id));
}

const User& find_user(const Scenario& scn, int user_id) {
  for (const auto& u : scn.users)
    if (u.id == user_id) return u;
  throw std::out_of_range("unknown user id " + std::to_string(user_id));
}

int nearest_rrh(const Scenario& scn, const Vec3& pos) {
  int best = scn.rrhs.front().id;
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& r : scn.rrhs) {
    const double d = distance_2d(r.position, pos);
    if (d < best_d) {
      best_d = d;
      best = r.id;
    }
  }
  return best;
}

// Reflects a coordinate into [lo, hi], flipping the velocity sign per bounce.
void reflect_axis(double& x, double& v, double lo, double hi) {
  const double span = hi - lo;
  if (span <= 0.0) return;
  while (x < lo || x > hi) {
    if (x < lo) {
      x = 2.0 * lo - x;
      v = -v;
    } else {
      x = 2.0 * hi - x;
      v = -v;
    }
  }
}

// Entry parameter of the 2-D LOS segment into a rectangle footprint, if any.
std::optional<double> rectangle_entry_t(const Vec3& p0, const Vec3& p1, const Vec3& lo,
                                        const Vec3& hi) {
  // Liang-Barsky clipping on [0,1].
  const double dx = p1.x - p0.x, dy = p1.y - p0.y;
  double t0 = 0.0, t1 = 1.0;
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {p0.x - lo.x, hi.x - p0.x, p0.y - lo.y, hi.y - p0.y};
  for (int i = 0; i < 4; ++i) {
    if (p[i] == 0.0) {
      if (q[i] < 0.0) return std::nullopt;  // parallel and outside
    } else {
      const double r = q[i] / p[i];
      if (p[i] < 0.0) {
        if (r > t1) return std::nullopt;
        t0 = std::max(t0, r);
      } else {
        if (r < t0) return std::nullopt;
        t1 = std::min(t1, r);
      }
    }
  }
  if (t0 > t1) return std::nullopt;
  return t0;
}

}  // namespace

Scenario build_scenario(const ScenarioConfig& config) {
  if (config.area_width_m <= 0.0 || config.area_height_m <= 0.0)
    throw std::invalid_argument("scenario: area dimensions must be positive");
  if (config.num_rrhs < 1) throw std::invalid_argument("scenario: num_rrhs must be >= 1");
  if (config.rrh_num_antennas < 1 || config.user_num_antennas < 1)
    throw std::invalid_argument("scenario: antenna counts must be >= 1");
  if (config.rrh_height_m <= 0.0)
    throw std::invalid_argument("scenario: rrh_height_m must be positive");
  if (config.tti_s <= 0.0) throw std::invalid_argument("scenario: tti_s must be positive");
  if (config.scatterer_density_per_m2 < 0.0)
    throw std::invalid_argument("scenario: scatterer density must be >= 0");
  if (config.scatterer_gain_min <= 0.0 || config.scatterer_gain_max > 1.0 ||
      config.scatterer_gain_min > config.scatterer_gain_max)
    throw std::invalid_argument("scenario: reflection gains must satisfy 0 < min <= max <= 1");
  for (const auto& s : config.shadows)
    if (s.height_m < 0.0) throw std::invalid_argument("scenario: shadow height must be >= 0");

  Scenario scn;
  scn.area_width_m = config.area_width_m;
  scn.area_height_m = config.area_height_m;
  scn.tti_s = config.tti_s;
  scn.rng_seed = config.rng_seed;
  scn.shadows = config.shadows;

  // RRHs on the area corners (cycling for counts > 4), boresight to center.
  const double W = config.area_width_m, H = config.area_height_m;
  const Vec3 corners[4] = {{0, 0, 0}, {W, 0, 0}, {0, H, 0}, {W, H, 0}};
  const Vec3 center{W / 2.0, H / 2.0, 0.0};
  for (int i = 0; i < config.num_rrhs; ++i) {
    Rrh r;
    r.id = i;
    r.position = corners[i % 4];
    r.position.z = config.rrh_height_m;
    r.boresight_azimuth_deg = bearing_deg(r.position, center);
    r.num_antennas = config.rrh_num_antennas;
    scn.rrhs.push_back(r);
  }

  // One user per RRH, at the midpoint between its RRH corner and the center.
  for (int i = 0; i < config.num_rrhs; ++i) {
    User u;
    u.id = i;
    u.position = (scn.rrhs[i].position + center) * 0.5;
    u.position.z = config.user_height_m;
    u.num_antennas = config.user_num_antennas;
    u.serving_rrh = nearest_rrh(scn, u.position);
    const double heading = bearing_deg(u.position, scn.rrhs[u.serving_rrh].position);
    u.velocity = {config.user_speed_mps * std::cos(deg_to_rad(heading)),
                  config.user_speed_mps * std::sin(deg_to_rad(heading)), 0.0};
    scn.users.push_back(u);
  }

  // Binomial point process: round(density*area) i.i.d. uniform points.
  ScattererField field;
  field.density_per_m2 = config.scatterer_density_per_m2;
  field.area_min_x = 0.0;
  field.area_min_y = 0.0;
  field.area_max_x = W;
  field.area_max_y = H;
  const auto count =
      static_cast<std::size_t>(std::llround(config.scatterer_density_per_m2 * W * H));
  Rng rng = make_rng(derive_seed(config.rng_seed, rng_stream::kScatterers));
  std::uniform_real_distribution<double> ux(0.0, W), uy(0.0, H);
  std::uniform_real_distribution<double> uz(0.0, config.scatterer_max_height_m);
  std::uniform_real_distribution<double> ug(config.scatterer_gain_min, config.scatterer_gain_max);
  field.points.reserve(count);
  field.reflection_gains.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    field.points.push_back({ux(rng), uy(rng), uz(rng)});
    field.reflection_gains.push_back(ug(rng));
  }
  scn.scatterers = std::move(field);
  return scn;
}

Scenario advance(const Scenario& scenario, int num_ttis) {
  if (num_ttis < 0) throw std::invalid_argument("advance: num_ttis must be >= 0");
  Scenario out = scenario;
  const double dt = scenario.tti_s * static_cast<double>(num_ttis);
  for (auto& u : out.users) {
    u.position.x += u.velocity.x * dt;
    u.position.y += u.velocity.y * dt;
    u.position.z += u.velocity.z * dt;
    reflect_axis(u.position.x, u.velocity.x, 0.0, out.area_width_m);
    reflect_axis(u.position.y, u.velocity.y, 0.0, out.area_height_m);
  }
  return out;
}

double user_heading_deg(const User& user) {
  if (user.velocity.x == 0.0 && user.velocity.y == 0.0) return 0.0;
  return rad_to_deg(std::atan2(user.velocity.y, user.velocity.x));
}

LinkGeometry geometry(const Scenario& scenario, int rrh_id, int user_id) {
  const Rrh& rrh = find_rrh(scenario, rrh_id);
  const User& user = find_user(scenario, user_id);

  LinkGeometry geo;
  geo.distance_m = distance(rrh.position, user.position);
  geo.azimuth_aod_deg = relative_azimuth_deg(rrh.position, user.position, rrh.boresight_azimuth_deg);
  geo.azimuth_aoa_deg = relative_azimuth_deg(user.position, rrh.position, user_heading_deg(user));

  // A shadow object blocks LOS when the 2-D ray crosses its footprint and
  // the straight tx->rx line is at or below the object's height there.
  for (const auto& obj : scenario.shadows) {
    std::optional<double> t;
    if (obj.footprint == ShadowObject::Footprint::segment)
      t = segment_intersection_t(rrh.position, user.position, obj.a, obj.b);
    else
      t = rectangle_entry_t(rrh.position, user.position, obj.a, obj.b);
    if (!t) continue;
    const double ray_height = rrh.position.z + (*t) * (user.position.z - rrh.position.z);
    if (ray_height <= obj.height_m) geo.los_blocked_by.push_back(obj);
  }
  return geo;
}

Scenario place_user(const Scenario& scenario, int user_id, const Vec3& position) {
  Scenario out = scenario;
  for (auto& u : out.users) {
    if (u.id != user_id) continue;
    const double speed = norm(u.velocity);
    u.position = position;
    const Rrh& rrh = find_rrh(out, u.serving_rrh);
    const double heading = bearing_deg(u.position, rrh.position);
    u.velocity = {speed * std::cos(deg_to_rad(heading)), speed * std::sin(deg_to_rad(heading)),
                  0.0};
    return out;
  }
  throw std::out_of_range("unknown user id " + std::to_string(user_id));
}

}  // namespace cranlearn
