// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include "dmsec/channel.hpp"
#include "dmsec/secrecy.hpp"

namespace dmsec {

struct NspResult {
  SolutionState state;
  /// Set when the eavesdropper channel is (numerically) parallel to the
  /// legitimate one and the AN direction fell back to an arbitrary unit
  /// vector orthogonal to h_b.
  bool degenerate = false;
};

/// Null-space-projection baseline: maximum-ratio beamforming toward the
/// legitimate user, AN formed by projecting the eavesdropper channel onto
/// the orthogonal complement of h_b, and the power split optimized for those
/// fixed vectors. Requires N ≥ 2.
NspResult nsp_solution(const ChannelPair& cp, const SystemConfig& cfg);
NspResult nsp_solution(const SystemConfig& cfg);

}  // namespace dmsec
