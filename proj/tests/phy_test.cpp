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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "cranlearn/rng.hpp"

namespace cranlearn {
namespace {

TEST(Codebook, GridCountsMatchCoverage) {
  const Codebook tx = build_codebook(CodebookSide::transmit, 8, 3.0, -60.0, 60.0);
  EXPECT_EQ(tx.size(), 41);
  const Codebook rx = build_codebook(CodebookSide::receive, 2, 12.0, -60.0, 60.0);
  EXPECT_EQ(rx.size(), 11);
}

TEST(Codebook, BeamsAreUnitNorm) {
  const Codebook tx = build_codebook(CodebookSide::transmit, 8, 3.0, -60.0, 60.0);
  for (const auto& v : tx.vectors) EXPECT_NEAR(arma::norm(v, 2), 1.0, 1e-12);
}

TEST(Codebook, IndexAngleMappingIsInvertible) {
  const Codebook rx = build_codebook(CodebookSide::receive, 2, 12.0, -60.0, 60.0);
  for (int i = 0; i < rx.size(); ++i) EXPECT_EQ(rx.nearest_index(rx.angle_of(i)), i);
  EXPECT_EQ(rx.nearest_index(-120.0), 0);
  EXPECT_EQ(rx.nearest_index(120.0), rx.size() - 1);
}

TEST(Codebook, CoverageNarrowerThanStepThrows) {
  EXPECT_THROW(build_codebook(CodebookSide::transmit, 8, 3.0, 0.0, 2.0), std::invalid_argument);
  EXPECT_THROW(build_codebook(CodebookSide::transmit, 8, -1.0, -60.0, 60.0),
               std::invalid_argument);
}

ChannelMatrix make_channel(const arma::cx_mat& entries) {
  ChannelMatrix cm;
  cm.entries = entries;
  return cm;
}

TEST(ReceivedPower, ZeroChannelGivesZero) {
  const ChannelMatrix cm = make_channel(arma::cx_mat(2, 8, arma::fill::zeros));
  const arma::cx_vec u = steering_vector(0.0, 2);
  const arma::cx_vec v = steering_vector(0.0, 8);
  EXPECT_EQ(received_power(cm, u, v, 0.01, 1e-3), 0.0);
}

TEST(ReceivedPower, AlignedSteeringGivesFullPower) {
  const arma::cx_vec a_rx = steering_vector(17.0, 2);
  const arma::cx_vec a_tx = steering_vector(-23.0, 8);
  const ChannelMatrix cm = make_channel(a_rx * a_tx.t());
  const double p = received_power(cm, a_rx, a_tx, 0.01, 1e-3);
  EXPECT_NEAR(p, 1e-3 * 0.01 * 0.01, 1e-3 * 0.01 * 0.01 * 1e-12);
}

TEST(ReceivedPower, MatchesIndependentDenseEvaluation) {
  Rng rng = make_rng(42);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int trial = 0; trial < 100; ++trial) {
    arma::cx_mat H(2, 8);
    for (arma::uword i = 0; i < H.n_elem; ++i) H(i) = {gauss(rng), gauss(rng)};
    arma::cx_vec u(2), v(8);
    for (arma::uword i = 0; i < 2; ++i) u(i) = {gauss(rng), gauss(rng)};
    for (arma::uword i = 0; i < 8; ++i) v(i) = {gauss(rng), gauss(rng)};

    // Plain double loop, conjugating u by hand.
    std::complex<double> acc = 0.0;
    for (arma::uword r = 0; r < 2; ++r)
      for (arma::uword c = 0; c < 8; ++c) acc += std::conj(u(r)) * H(r, c) * v(c);
    const double expected = 2e-3 * 0.25 * std::norm(acc);

    const double actual = received_power(make_channel(H), u, v, 0.5, 2e-3);
    EXPECT_NEAR(actual, expected, std::abs(expected) * 1e-9);
  }
}

TEST(ReceivedPower, DimensionMismatchThrows) {
  const ChannelMatrix cm = make_channel(arma::cx_mat(2, 8, arma::fill::zeros));
  EXPECT_THROW(received_power(cm, steering_vector(0, 3), steering_vector(0, 8), 1.0, 1.0),
               std::invalid_argument);
  EXPECT_THROW(received_power(cm, steering_vector(0, 2), steering_vector(0, 7), 1.0, 1.0),
               std::invalid_argument);
}

TEST(Sinr, BasicRatios) {
  EXPECT_NEAR(sinr(1e-13, {}, 1e-13), 1.0, 1e-15);
  EXPECT_EQ(sinr(0.0, {1e-12}, 1e-13), 0.0);
  EXPECT_NEAR(sinr(4.0, {1.0, 2.0}, 1.0), 1.0, 1e-15);
}

TEST(Sinr, InvalidInputsThrow) {
  EXPECT_THROW(sinr(-1.0, {}, 1.0), std::invalid_argument);
  EXPECT_THROW(sinr(1.0, {-1.0}, 1.0), std::invalid_argument);
  EXPECT_THROW(sinr(1.0, {}, 0.0), std::invalid_argument);
}

TEST(Sinr, ScaleInvariance) {
  Rng rng = make_rng(7);
  std::uniform_real_distribution<double> upow(0.0, 1.0), uscale(-6.0, 6.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const double p = upow(rng);
    const std::vector<double> interf{upow(rng), upow(rng), upow(rng)};
    const double noise = upow(rng) + 1e-9;
    const double k = std::pow(10.0, uscale(rng));
    std::vector<double> scaled;
    for (double x : interf) scaled.push_back(x * k);
    const double a = sinr(p, interf, noise);
    const double b = sinr(p * k, scaled, noise * k);
    EXPECT_NEAR(a, b, std::abs(a) * 1e-9 + 1e-15);
  }
}

TEST(TransportCapacity, TableParametersGiveFiveThousandBits) {
  const PhyConfig phy;
  EXPECT_EQ(phy.symbols(), 5000.0);  // 1 ms * 5 MHz
  EXPECT_EQ(transport_capacity(1.0, phy.symbols()), 5000.0);
  EXPECT_EQ(transport_capacity(0.0, phy.symbols()), 0.0);
  EXPECT_NEAR(transport_capacity(3.0, phy.symbols()), 10000.0, 1e-9);
}

TEST(TransportCapacity, MonotoneInSinr) {
  Rng rng = make_rng(8);
  std::uniform_real_distribution<double> u(0.0, 1e4);
  for (int trial = 0; trial < 1000; ++trial) {
    double g1 = u(rng), g2 = u(rng);
    if (g1 > g2) std::swap(g1, g2);
    EXPECT_LE(transport_capacity(g1, 5000.0), transport_capacity(g2, 5000.0));
  }
  EXPECT_EQ(transport_capacity(0.0, 5000.0), 0.0);
}

TEST(TransmissionOutcome, StrictInequality) {
  EXPECT_TRUE(transmission_outcome(4999.0, 5000.0));
  EXPECT_FALSE(transmission_outcome(5000.0, 5000.0));
  EXPECT_TRUE(transmission_outcome(0.0, 1.0));
  EXPECT_FALSE(transmission_outcome(0.0, 0.0));
}

TEST(BeamSweep, OnGridLosAngleIsOptimal) {
  const Codebook tx = build_codebook(CodebookSide::transmit, 8, 3.0, -60.0, 60.0);
  const Codebook rx = build_codebook(CodebookSide::receive, 2, 12.0, -60.0, 60.0);
  for (const double aod : {-57.0, -12.0, 0.0, 21.0, 60.0}) {
    for (const double aoa : {-48.0, 0.0, 36.0}) {
      const ChannelMatrix cm =
          make_channel(steering_vector(aoa, 2) * steering_vector(aod, 8).t());
      double best = -1.0;
      int best_b = -1, best_f = -1;
      for (int b = 0; b < tx.size(); ++b) {
        for (int f = 0; f < rx.size(); ++f) {
          const double p = received_power(cm, rx.vectors[f], tx.vectors[b], 1.0, 1.0);
          if (p > best) {
            best = p;
            best_b = b;
            best_f = f;
          }
        }
      }
      EXPECT_EQ(best_b, tx.nearest_index(aod));
      EXPECT_EQ(best_f, rx.nearest_index(aoa));
    }
  }
}

// Eq-level oracle: module capacities equal a from-scratch re-evaluation of
// the SINR chain on random instances.
TEST(SystemCapacities, MatchesDirectRecomputation) {
  const Codebook tx = build_codebook(CodebookSide::transmit, 8, 15.0, -60.0, 60.0);
  const Codebook rx = build_codebook(CodebookSide::receive, 2, 30.0, -60.0, 60.0);
  const PhyConfig phy;
  const ChannelConfig channel_cfg;

  Rng rng = make_rng(31);
  std::uniform_int_distribution<int> pick_beam(0, tx.size() - 1);
  std::uniform_int_distribution<int> pick_filter(0, rx.size() - 1);

  for (int trial = 0; trial < 100; ++trial) {
    ScenarioConfig cfg;
    cfg.rng_seed = static_cast<std::uint64_t>(trial);
    cfg.scatterer_density_per_m2 = 0.002;
    const Scenario scn = build_scenario(cfg);
    const PairChannels channels = compute_pair_channels(scn, 0, channel_cfg);
    const LinkGains gains = compute_pathloss_gains(scn, 0, channel_cfg.pathloss);

    BeamAssignment assignment;
    for (int i = 0; i < 4; ++i) {
      assignment.beams.push_back(pick_beam(rng));
      assignment.filters.push_back(pick_filter(rng));
    }

    const std::vector<double> caps =
        system_capacities(channels, gains, tx, rx, assignment, phy);

    for (int n = 0; n < 4; ++n) {
      const arma::cx_vec& u = rx.vectors[assignment.filters[n]];
      double signal = 0.0;
      double interference = 0.0;
      for (int m = 0; m < 4; ++m) {
        const arma::cx_vec& v = tx.vectors[assignment.beams[m]];
        std::complex<double> acc = 0.0;
        const arma::cx_mat& H = channels.at(m, n).entries;
        for (arma::uword r = 0; r < H.n_rows; ++r)
          for (arma::uword c = 0; c < H.n_cols; ++c) acc += std::conj(u(r)) * H(r, c) * v(c);
        const double g = gains.at(m, n);
        const double p = phy.tx_power_w * g * g * std::norm(acc);
        if (m == n)
          signal = p;
        else
          interference += p;
      }
      const double gamma = signal / (phy.noise_power_w + interference);
      const double expected = phy.symbols() * std::log2(1.0 + gamma);
      EXPECT_NEAR(caps[static_cast<std::size_t>(n)], expected, std::abs(expected) * 1e-9);
    }
  }
}

TEST(PowerTable, AgreesWithSystemCapacities) {
  ScenarioConfig cfg;
  cfg.rng_seed = 77;
  const Scenario scn = build_scenario(cfg);
  const ChannelConfig channel_cfg;
  const PhyConfig phy;
  const Codebook tx = build_codebook(CodebookSide::transmit, 8, 12.0, -60.0, 60.0);
  const Codebook rx = build_codebook(CodebookSide::receive, 2, 30.0, -60.0, 60.0);
  const PairChannels channels = compute_pair_channels(scn, 0, channel_cfg);
  const LinkGains gains = compute_pathloss_gains(scn, 0, channel_cfg.pathloss);
  const PowerTable table(channels, gains, tx, rx, phy);

  Rng rng = make_rng(5);
  std::uniform_int_distribution<int> pick_beam(0, tx.size() - 1);
  std::uniform_int_distribution<int> pick_filter(0, rx.size() - 1);
  for (int trial = 0; trial < 50; ++trial) {
    BeamAssignment a;
    for (int i = 0; i < 4; ++i) {
      a.beams.push_back(pick_beam(rng));
      a.filters.push_back(pick_filter(rng));
    }
    const auto direct = system_capacities(channels, gains, tx, rx, a, phy);
    const auto cached = table.capacities(a, phy);
    double sum = 0.0;
    for (int i = 0; i < 4; ++i) {
      EXPECT_NEAR(cached[i], direct[i], std::abs(direct[i]) * 1e-9);
      sum += cached[i];
    }
    EXPECT_NEAR(table.sum_capacity(a, phy), sum, std::abs(sum) * 1e-12);
  }
}

}  // namespace
}  // namespace cranlearn
