// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include "dmsec/channel.hpp"
#include "dmsec/linalg.hpp"

namespace dmsec {

/// A candidate transmit design: confidential-message beamformer, artificial-
/// noise projector, and the fraction beta of the power budget given to the
/// confidential message (1 − beta goes to the noise).
struct SolutionState {
  CVec v_b;
  CVec v_an;
  double beta = 0.5;
  double secrecy_rate_bits = 0.0;  // clamped at zero
};

/// Throws std::invalid_argument unless both vectors are unit norm (1e-9)
/// and beta lies in [0, 1].
void require_valid_state(const SolutionState& s);

/// log₂(1 + β·|h_bᴴv_b|² / ((1−β)·|h_bᴴv_an|² + σ²/P_s)) — bits per channel use.
double rate_bob(const ChannelPair& cp, const SolutionState& s, const SystemConfig& cfg);

/// Same expression evaluated on the eavesdropper channel.
double rate_eve(const ChannelPair& cp, const SolutionState& s, const SystemConfig& cfg);

/// rate_bob − rate_eve without the zero clamp; the quantity the optimizers
/// maximize.
double secrecy_rate_unclamped(const ChannelPair& cp, const SolutionState& s,
                              const SystemConfig& cfg);

/// max{0, rate_bob − rate_eve}.
double secrecy_rate(const ChannelPair& cp, const SolutionState& s,
                    const SystemConfig& cfg);

}  // namespace dmsec
