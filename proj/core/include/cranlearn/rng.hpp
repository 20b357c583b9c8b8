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

#ifndef CRANLEARN_RNG_HPP
#define CRANLEARN_RNG_HPP

#include <cstdint>
#include <random>

namespace cranlearn {

/// Stream salts for deriving independent RNG streams from one master seed.
/// Every stochastic stage owns a salt, so results do not depend on the order
/// in which stages (or threads) consume randomness.
namespace rng_stream {
constexpr std::uint64_t kScatterers = 0x5ca77e12;
constexpr std::uint64_t kHeadings = 0x4ead1235;
constexpr std::uint64_t kTree = 0x72ee0001;
constexpr std::uint64_t kBalance = 0xba1a4ce5;
constexpr std::uint64_t kGenieRestart = 0x6e41e777;
constexpr std::uint64_t kTrainPositions = 0x7241f05a;
constexpr std::uint64_t kTestPositions = 0x7e57f05a;
constexpr std::uint64_t kPositionNoise = 0xf0541234;
constexpr std::uint64_t kPacketDraw = 0xfac4e7d1;
constexpr std::uint64_t kBackoff = 0xbac0ff01;
constexpr std::uint64_t kImportance = 0x1f907a11;
}  // namespace rng_stream

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derives a child seed from a master seed and a stream salt.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  return splitmix64(master ^ splitmix64(stream));
}

/// Three-way derivation for per-task streams (e.g. per tree, per placement).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream, std::uint64_t task) {
  return splitmix64(derive_seed(master, stream) ^ splitmix64(task + 1));
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng(seed); }

}  // namespace cranlearn

#endif  // CRANLEARN_RNG_HPP
