// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include "dmsec/channel.hpp"
#include "dmsec/linalg.hpp"

namespace dmsec {

/// The two effective interference-plus-noise scalars seen through the fixed
/// AN projector: a on the legitimate channel, b on the eavesdropper channel.
struct BeamScalars {
  double a = 0.0;
  double b = 0.0;
};

/// a = (1−β)·|h_bᴴv_an|² + σ²/P_s,  b = (1−β)·|h_eᴴv_an|² + σ²/P_s.
BeamScalars beam_scalars(const ChannelPair& cp, const CVec& v_an, double beta,
                         const SystemConfig& cfg);

/// Secrecy-rate-optimal confidential-message beamformer for fixed (v_an, β):
/// the dominant eigenvector of
///   [ab·I + βa·h_e h_eᴴ]⁻¹ [ab·I + βb·h_b h_bᴴ],
/// computed by power iteration with Sherman–Morrison applications. At β = 0
/// the objective is flat and h_b (the natural limit point) is returned.
CVec optimize_vb(const ChannelPair& cp, const CVec& v_an, double beta,
                 const SystemConfig& cfg);

}  // namespace dmsec
