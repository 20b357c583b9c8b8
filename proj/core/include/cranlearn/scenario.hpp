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

#ifndef CRANLEARN_SCENARIO_HPP
#define CRANLEARN_SCENARIO_HPP

#include <cstdint>
#include <vector>

#include "cranlearn/geometry.hpp"

namespace cranlearn {

/// Remote radio head: the RF front end serving exactly one user.
struct Rrh {
  int id = 0;
  Vec3 position;                  // position.z is the antenna height
  double boresight_azimuth_deg = 0.0;
  int num_antennas = 8;
};

struct User {
  int id = 0;
  Vec3 position;                  // position.z is the antenna height
  Vec3 velocity;                  // heading defines the receive array broadside
  int num_antennas = 2;
  int serving_rrh = 0;
};

/// Static field of point scatterers with per-point reflection gains in (0,1].
struct ScattererField {
  double density_per_m2 = 0.0;
  double area_min_x = 0.0, area_min_y = 0.0;
  double area_max_x = 0.0, area_max_y = 0.0;
  std::vector<Vec3> points;
  std::vector<double> reflection_gains;
};

/// Blocking object. Footprint is either a 2-D segment (a-b) or an
/// axis-aligned rectangle (a = min corner, b = max corner).
struct ShadowObject {
  enum class Footprint { segment, rectangle };
  Footprint footprint = Footprint::segment;
  Vec3 a, b;
  double height_m = 0.0;
};

struct Scenario {
  std::vector<Rrh> rrhs;
  std::vector<User> users;
  ScattererField scatterers;
  std::vector<ShadowObject> shadows;
  double area_width_m = 0.0;
  double area_height_m = 0.0;
  double tti_s = 1e-3;
  std::uint64_t rng_seed = 0;
};

struct ScenarioConfig {
  double area_width_m = 100.0;
  double area_height_m = 100.0;
  int num_rrhs = 4;               // placed on the corners of the service area
  double rrh_height_m = 10.0;
  int rrh_num_antennas = 8;
  double user_height_m = 1.5;
  int user_num_antennas = 2;
  double user_speed_mps = 30.0;
  double scatterer_density_per_m2 = 0.01;
  double scatterer_gain_min = 0.002;
  double scatterer_gain_max = 0.008;
  double scatterer_max_height_m = 5.0;
  std::vector<ShadowObject> shadows;
  double tti_s = 1e-3;
  std::uint64_t rng_seed = 1;
};

/// Per-link geometric truth used by the channel and the geometric baseline.
struct LinkGeometry {
  double distance_m = 0.0;
  double azimuth_aod_deg = 0.0;   // at the RRH, relative to its boresight
  double azimuth_aoa_deg = 0.0;   // at the user, relative to its heading
  std::vector<ShadowObject> los_blocked_by;
};

/// Builds a deterministic world from the config. RRHs sit on the corners of
/// the service area with boresights toward the center; one user per RRH,
/// initially at its quadrant center, facing its serving RRH. Scatterers are
/// drawn as a binomial point process (round(density*area) i.i.d. uniform
/// points).
/// Throws std::invalid_argument on non-positive dimensions or counts.
Scenario build_scenario(const ScenarioConfig& config);

/// Moves every user by velocity * tti * num_ttis with specular reflection at
/// the area bounds; RRHs, scatterers and shadows are static. Returns a new
/// scenario; the input is untouched.
Scenario advance(const Scenario& scenario, int num_ttis);

/// Geometric truth for one RRH-user link.
/// Throws std::out_of_range for unknown ids.
LinkGeometry geometry(const Scenario& scenario, int rrh_id, int user_id);

/// Heading of the user's receive array in degrees (0 = +x). Falls back to 0
/// for a zero horizontal velocity.
double user_heading_deg(const User& user);

/// Repositions a user and re-orients it (velocity) toward its serving RRH,
/// keeping the configured speed. Returns a new scenario.
Scenario place_user(const Scenario& scenario, int user_id, const Vec3& position);

}  // namespace cranlearn

#endif  // CRANLEARN_SCENARIO_HPP
