// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <vector>

#include "dmsec/channel.hpp"
#include "dmsec/linalg.hpp"

namespace dmsec {

/// The secrecy rate as a function of the power split is log₂ φ(β) with
/// φ(β) = (i·β² + j·β + k)/(l·β² + m·β + k). Coefficients are stored in
/// P_s-normalized power units (only the transmit SNR enters), which leaves
/// φ and the rate unchanged and makes runs independent of the absolute
/// power scale.
struct PAQuadratic {
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;
  double l = 0.0;
  double m = 0.0;
  /// k²(i−l)² − k(im−jl)(j−m): quarter-discriminant of the stationarity
  /// quadratic (im−jl)β² + 2k(i−l)β + k(j−m) = 0.
  double delta = 0.0;
  /// Stationary points strictly inside (0, 1), ascending.
  std::vector<double> roots;
};

/// Fills delta and the interior roots for directly supplied coefficients.
PAQuadratic make_pa_quadratic(double i, double j, double k, double l, double m);

PAQuadratic pa_coefficients(const ChannelPair& cp, const CVec& v_b, const CVec& v_an,
                            const SystemConfig& cfg);

double pa_phi(const PAQuadratic& q, double beta);

enum class PABranch {
  flat,                // φ ≡ 1: any β is optimal
  linear_interior,     // im−jl = 0, singular point inside (0, 1)
  linear_endpoint,     // im−jl = 0, no interior singular point
  quad_both_interior,  // both quadratic roots inside (0, 1)
  quad_one_interior,   // exactly one root inside (0, 1)
  quad_no_interior,    // real roots, none inside (0, 1)
  monotone_increasing, // Δ < 0, im−jl > 0
  monotone_decreasing, // Δ < 0, im−jl < 0
};

const char* pa_branch_name(PABranch b);

struct PAResult {
  double beta_star = 0.0;
  double rate_bits = 0.0;  // log₂ φ(β*), unclamped
  PABranch branch = PABranch::flat;
};

/// Closed-form optimal power split over [0, 1]: evaluates φ at the interior
/// stationary points and both endpoints; when the stationarity quadratic has
/// no real root, φ is monotone and the matching endpoint is returned
/// directly. Ties within 1e-12 of the best φ resolve to the largest β.
PAResult optimize_beta(const PAQuadratic& q);

}  // namespace dmsec
