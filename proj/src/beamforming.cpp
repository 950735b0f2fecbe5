// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/beamforming.hpp"

#include <cmath>
#include <stdexcept>

namespace dmsec {

BeamScalars beam_scalars(const ChannelPair& cp, const CVec& v_an, double beta,
                         const SystemConfig& cfg) {
  if (!is_unit_norm(v_an))
    throw std::invalid_argument("beam_scalars: v_an is not unit norm");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("beam_scalars: beta outside [0, 1]");
  const double inv_snr = cfg.snr_inverse();
  BeamScalars s;
  s.a = (1.0 - beta) * std::norm(dot(cp.h_b, v_an)) + inv_snr;
  s.b = (1.0 - beta) * std::norm(dot(cp.h_e, v_an)) + inv_snr;
  return s;
}

CVec optimize_vb(const ChannelPair& cp, const CVec& v_an, double beta,
                 const SystemConfig& cfg) {
  if (beta == 0.0) {
    // No power on the confidential message: every unit vector gives rate 0,
    // return the matched filter as the limit point.
    CVec v = cp.h_b;
    return fix_global_phase(v);
  }
  const BeamScalars s = beam_scalars(cp, v_an, beta, cfg);
  const double ab = s.a * s.b;
  const std::size_t n = cp.h_b.size();

  RankOneSum denom(ab, n);
  denom.add_term(beta * s.a, cp.h_e);
  RankOneSum numer(ab, n);
  numer.add_term(beta * s.b, cp.h_b);

  auto op = [&](const CVec& v) { return denom.solve(numer.apply(v)); };
  const EigenPair eig = dominant_eigenvector(op, n, cfg.tol.power_iter_tol,
                                             cfg.tol.power_iter_max_iter);
  return eig.vector;
}

}  // namespace dmsec
