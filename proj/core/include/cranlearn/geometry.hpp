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

#ifndef CRANLEARN_GEOMETRY_HPP
#define CRANLEARN_GEOMETRY_HPP

#include <cmath>
#include <optional>

namespace cranlearn {

/// Cartesian position or velocity in meters (meters per second).
struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  friend Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Vec3 operator*(const Vec3& a, double s) { return {a.x * s, a.y * s, a.z * s}; }
  friend bool operator==(const Vec3& a, const Vec3& b) = default;
};

inline double norm(const Vec3& v) { return std::sqrt(v.x * v.x + v.y * v.y + v.z * v.z); }

inline double distance(const Vec3& a, const Vec3& b) { return norm(a - b); }

inline double distance_2d(const Vec3& a, const Vec3& b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return std::sqrt(dx * dx + dy * dy);
}

constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

/// Wraps an angle in degrees into (-180, 180].
inline double normalize_deg(double deg) {
  double a = std::fmod(deg, 360.0);
  if (a <= -180.0) a += 360.0;
  if (a > 180.0) a -= 360.0;
  return a;
}

/// Horizontal-plane bearing of `to` as seen from `from`, degrees, 0 = +x axis.
inline double bearing_deg(const Vec3& from, const Vec3& to) {
  return rad_to_deg(std::atan2(to.y - from.y, to.x - from.x));
}

/// Bearing of `to` from `from`, measured against a reference direction.
inline double relative_azimuth_deg(const Vec3& from, const Vec3& to, double reference_deg) {
  return normalize_deg(bearing_deg(from, to) - reference_deg);
}

/// Parameter t in [0,1] along a->b at which the 2-D segments a-b and c-d
/// cross, or nullopt when they do not.
inline std::optional<double> segment_intersection_t(const Vec3& a, const Vec3& b, const Vec3& c,
                                                    const Vec3& d) {
  const double rx = b.x - a.x, ry = b.y - a.y;
  const double sx = d.x - c.x, sy = d.y - c.y;
  const double denom = rx * sy - ry * sx;
  if (denom == 0.0) return std::nullopt;  // parallel or degenerate
  const double qpx = c.x - a.x, qpy = c.y - a.y;
  const double t = (qpx * sy - qpy * sx) / denom;
  const double u = (qpx * ry - qpy * rx) / denom;
  if (t < 0.0 || t > 1.0 || u < 0.0 || u > 1.0) return std::nullopt;
  return t;
}

}  // namespace cranlearn

#endif  // CRANLEARN_GEOMETRY_HPP
