// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <utility>
#include <vector>

#include "dmsec/channel.hpp"
#include "dmsec/secrecy.hpp"

namespace dmsec {

/// One outer iteration of the alternating optimization; the three rates are
/// the unclamped secrecy rates after each sub-step.
struct IterationRecord {
  int iteration = 0;
  double rate_after_vb = 0.0;
  double rate_after_van = 0.0;
  double rate_after_beta = 0.0;
  double beta = 0.0;
};

struct IterationTrace {
  std::vector<IterationRecord> records;
  bool converged = false;
  int iterations_used = 0;
};

/// Alternating iterative structure: starting from β = 0.5 and the leakage-
/// ratio AN initializer, cycle beamformer → AN projector → power split until
/// the secrecy-rate increment drops below the configured threshold (absolute
/// rule by default, fractional when configured) or the outer-iteration cap
/// is hit. Fully deterministic.
std::pair<SolutionState, IterationTrace> run_ais(const SystemConfig& cfg);

/// Secrecy rate per watt of transmit power.
double secure_ee(double rate_bits, const SystemConfig& cfg);

}  // namespace dmsec
