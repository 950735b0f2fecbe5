// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include <doctest.h>

#include <cmath>
#include <random>

#include "dmsec/secrecy.hpp"
#include "test_util.hpp"

using namespace dmsec;
using testutil::random_unit;

namespace {

/// Unit vector orthogonal to h, deterministic.
CVec orthogonal_to(const CVec& h, std::size_t basis_index = 0) {
  CVec u(h.size(), Complex(0.0, 0.0));
  u[basis_index] = Complex(1.0, 0.0);
  add_scaled(u, h, -dot(h, u));
  return normalized(std::move(u));
}

/// Independent coding of the secrecy rate as a log of a product of two
/// SINR factors, for cross-checking the rate-difference path.
double product_form_rate(const ChannelPair& cp, const SolutionState& s,
                         const SystemConfig& cfg) {
  const double inv = cfg.snr_inverse();
  const double b_an = std::norm(dot(cp.h_b, s.v_an));
  const double e_an = std::norm(dot(cp.h_e, s.v_an));
  const double b_cm = std::norm(dot(cp.h_b, s.v_b));
  const double e_cm = std::norm(dot(cp.h_e, s.v_b));
  const double factor_b =
      ((1.0 - s.beta) * b_an + inv + s.beta * b_cm) / ((1.0 - s.beta) * b_an + inv);
  const double factor_e =
      ((1.0 - s.beta) * e_an + inv) / ((1.0 - s.beta) * e_an + inv + s.beta * e_cm);
  return std::log2(factor_b * factor_e);
}

}  // namespace

TEST_CASE("zero CM power means zero rates") {
  SystemConfig cfg;
  cfg.n_antennas = 4;
  const ChannelPair cp = build_channels(cfg);
  std::mt19937_64 rng(21);
  SolutionState s{random_unit(rng, 4), random_unit(rng, 4), 0.0, 0.0};
  CHECK(rate_bob(cp, s, cfg) == 0.0);
  CHECK(rate_eve(cp, s, cfg) == 0.0);
  CHECK(secrecy_rate(cp, s, cfg) == 0.0);
}

TEST_CASE("scalar channel at 0 dB gives exactly one bit") {
  SystemConfig cfg;
  cfg.n_antennas = 1;
  cfg.snr_db = 0.0;
  const ChannelPair cp = build_channels(cfg);
  const SolutionState s{{Complex(1, 0)}, {Complex(1, 0)}, 1.0, 0.0};
  CHECK(rate_bob(cp, s, cfg) == 1.0);
}

TEST_CASE("matched beam with orthogonal AN hits the hand-computed rate") {
  SystemConfig cfg;
  cfg.n_antennas = 8;
  cfg.snr_db = 15.0;
  const ChannelPair cp = build_channels(cfg);
  SolutionState s;
  s.v_b = cp.h_b;
  s.v_an = orthogonal_to(cp.h_b);
  s.beta = 0.5;
  const double expected = std::log2(1.0 + 0.5 * std::pow(10.0, 1.5));
  CHECK(rate_bob(cp, s, cfg) == doctest::Approx(expected).epsilon(1e-12));
}

TEST_CASE("eavesdropper rate is the legitimate rate of the swapped channel pair") {
  SystemConfig cfg;
  cfg.n_antennas = 6;
  const ChannelPair cp = build_channels(cfg);
  const ChannelPair swapped{cp.h_e, cp.h_b};
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 5; ++trial) {
    const SolutionState s{random_unit(rng, 6), random_unit(rng, 6), 0.3 + 0.1 * trial,
                          0.0};
    CHECK(rate_eve(cp, s, cfg) == rate_bob(swapped, s, cfg));
    CHECK(secrecy_rate_unclamped(swapped, s, cfg) ==
          -secrecy_rate_unclamped(cp, s, cfg));
  }
}

TEST_CASE("identical channels leave no secrecy for any design") {
  SystemConfig cfg;
  cfg.n_antennas = 5;
  cfg.theta_e_deg = cfg.theta_b_deg;
  const ChannelPair cp = build_channels(cfg);
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 10; ++trial) {
    const SolutionState s{random_unit(rng, 5), random_unit(rng, 5),
                          trial / 10.0, 0.0};
    CHECK(secrecy_rate_unclamped(cp, s, cfg) == 0.0);
  }
}

TEST_CASE("two independent codings of the rate agree") {
  SystemConfig cfg;
  cfg.n_antennas = 4;
  const ChannelPair cp = build_channels(cfg);
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 20; ++trial) {
    const SolutionState s{random_unit(rng, 4), random_unit(rng, 4),
                          (trial + 0.5) / 21.0, 0.0};
    const double direct = secrecy_rate_unclamped(cp, s, cfg);
    CHECK(std::abs(direct - product_form_rate(cp, s, cfg)) <= 1e-10);
  }
}

TEST_CASE("rates depend on transmit power only through the SNR") {
  SystemConfig hi;  // 70 dBm
  hi.n_antennas = 4;
  SystemConfig lo = hi;
  lo.total_power_dbm = 0.0;
  const ChannelPair cp = build_channels(hi);
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 5; ++trial) {
    const SolutionState s{random_unit(rng, 4), random_unit(rng, 4), 0.4, 0.0};
    CHECK(rate_bob(cp, s, hi) == rate_bob(cp, s, lo));
    CHECK(rate_eve(cp, s, hi) == rate_eve(cp, s, lo));
    CHECK(secrecy_rate(cp, s, hi) == secrecy_rate(cp, s, lo));
  }
}

TEST_CASE("reported secrecy rate is clamped at zero") {
  SystemConfig cfg;
  cfg.n_antennas = 4;
  // Aim the beam at the eavesdropper to force a negative rate difference.
  const ChannelPair cp = build_channels(cfg);
  SolutionState s;
  s.v_b = cp.h_e;
  s.v_an = orthogonal_to(cp.h_e);
  s.beta = 0.9;
  CHECK(secrecy_rate_unclamped(cp, s, cfg) < 0.0);
  CHECK(secrecy_rate(cp, s, cfg) == 0.0);
}

TEST_CASE("legitimate rate grows with SNR for a matched beam") {
  SystemConfig cfg;
  cfg.n_antennas = 8;
  const ChannelPair cp = build_channels(cfg);
  SolutionState s;
  s.v_b = cp.h_b;
  s.v_an = orthogonal_to(cp.h_b);
  s.beta = 0.7;
  double prev = -1.0;
  for (double snr : {0.0, 5.0, 10.0, 15.0, 20.0}) {
    cfg.snr_db = snr;
    const double r = rate_bob(cp, s, cfg);
    CHECK(r > prev);
    prev = r;
  }
}

TEST_CASE("state validation rejects malformed inputs") {
  SystemConfig cfg;
  cfg.n_antennas = 3;
  const ChannelPair cp = build_channels(cfg);
  SolutionState bad_norm{{Complex(2, 0), Complex(0, 0), Complex(0, 0)},
                         {Complex(1, 0), Complex(0, 0), Complex(0, 0)},
                         0.5,
                         0.0};
  CHECK_THROWS_AS(rate_bob(cp, bad_norm, cfg), std::invalid_argument);
  SolutionState bad_beta{{Complex(1, 0), Complex(0, 0), Complex(0, 0)},
                         {Complex(1, 0), Complex(0, 0), Complex(0, 0)},
                         1.5,
                         0.0};
  CHECK_THROWS_AS(rate_eve(cp, bad_beta, cfg), std::invalid_argument);
}
