// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <vector>

#include "dmsec/channel.hpp"
#include "dmsec/linalg.hpp"

namespace dmsec {

/// The four positive-definite quadratic-form matrices of the AN objective.
/// Each one is a positively shifted identity plus a rank-one channel term,
/// so they are stored in structured form; dense() is available on each for
/// entrywise inspection.
struct ANQuadratics {
  RankOneSum c;
  RankOneSum d;
  RankOneSum e;
  RankOneSum f;

  std::size_t dim() const { return c.dim(); }
  /// (vᴴCv/vᴴDv)·(vᴴEv/vᴴFv) — equals 2^(unclamped secrecy rate).
  double objective(const CVec& v) const;
};

/// Builds C, D, E, F for fixed (v_b, β). Rejects β = 1: the AN carries zero
/// power there and the design is undefined.
ANQuadratics an_quadratics(const ChannelPair& cp, const CVec& v_b, double beta,
                           const SystemConfig& cfg);

struct GpiResult {
  CVec v;
  double objective = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
  /// Objective after every accepted step, starting with the initial point.
  std::vector<double> objective_trace;
};

/// Fixed-point iteration for the product of two generalized Rayleigh
/// quotients: v ← normalize([D/(vᴴDv) + F/(vᴴFv)]⁻¹ [C/(vᴴCv) + E/(vᴴEv)] v),
/// with a step-halving safeguard that keeps the objective non-decreasing.
/// Stops when the stationarity residual ‖Tv − μSv‖₂ drops below tol; on
/// iteration exhaustion the best iterate is returned with converged = false.
GpiResult gpi_optimize_van(const ANQuadratics& q, const CVec& v_init, double tol,
                           int max_iter);

/// Initial AN projector: the unit eigenvector maximizing the ratio of AN
/// leakage to the eavesdropper over leakage to the legitimate user plus
/// noise, i.e. the dominant eigenvector of
///   [h_b h_bᴴ + σ²/((1−β₀)P_s)·I]⁻¹ [h_e h_eᴴ].
CVec max_anlnr_init(const ChannelPair& cp, double beta0, const SystemConfig& cfg);

}  // namespace dmsec
