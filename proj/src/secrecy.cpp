// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/secrecy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dmsec {

void require_valid_state(const SolutionState& s) {
  if (!is_unit_norm(s.v_b))
    throw std::invalid_argument("SolutionState: v_b is not unit norm");
  if (!is_unit_norm(s.v_an))
    throw std::invalid_argument("SolutionState: v_an is not unit norm");
  if (!(s.beta >= 0.0 && s.beta <= 1.0))
    throw std::invalid_argument("SolutionState: beta outside [0, 1]");
}

namespace {

double rate_toward(const CVec& h, const SolutionState& s, const SystemConfig& cfg) {
  const double inv_snr = cfg.snr_inverse();
  const double signal = s.beta * std::norm(dot(h, s.v_b));
  const double interference = (1.0 - s.beta) * std::norm(dot(h, s.v_an)) + inv_snr;
  return std::log2(1.0 + signal / interference);
}

}  // namespace

double rate_bob(const ChannelPair& cp, const SolutionState& s, const SystemConfig& cfg) {
  require_valid_state(s);
  return rate_toward(cp.h_b, s, cfg);
}

double rate_eve(const ChannelPair& cp, const SolutionState& s, const SystemConfig& cfg) {
  require_valid_state(s);
  return rate_toward(cp.h_e, s, cfg);
}

double secrecy_rate_unclamped(const ChannelPair& cp, const SolutionState& s,
                              const SystemConfig& cfg) {
  require_valid_state(s);
  return rate_toward(cp.h_b, s, cfg) - rate_toward(cp.h_e, s, cfg);
}

double secrecy_rate(const ChannelPair& cp, const SolutionState& s,
                    const SystemConfig& cfg) {
  return std::max(0.0, secrecy_rate_unclamped(cp, s, cfg));
}

}  // namespace dmsec
