// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/ais.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>

#include "dmsec/an_design.hpp"
#include "dmsec/beamforming.hpp"
#include "dmsec/power_allocation.hpp"

namespace dmsec {

std::pair<SolutionState, IterationTrace> run_ais(const SystemConfig& cfg) {
  cfg.ensure_valid();
  const ChannelPair cp = build_channels(cfg);

  SolutionState state;
  state.beta = 0.5;
  state.v_an = max_anlnr_init(cp, state.beta, cfg);
  state.v_b = cp.h_b;

  IterationTrace trace;
  double prev_rate = 0.0;

  for (int it = 1; it <= cfg.tol.ais_max_outer_iter; ++it) {
    IterationRecord rec;
    rec.iteration = it;

    // Beamformer for fixed (v_an, β). The eigen-solution is exact up to the
    // power-iteration tolerance; keep the incumbent if it is numerically
    // ahead so the trace stays monotone.
    {
      const double entering = secrecy_rate_unclamped(cp, state, cfg);
      SolutionState cand = state;
      cand.v_b = optimize_vb(cp, state.v_an, state.beta, cfg);
      const double cand_rate = secrecy_rate_unclamped(cp, cand, cfg);
      if (it == 1 || cand_rate >= entering) {
        state.v_b = std::move(cand.v_b);
        rec.rate_after_vb = cand_rate;
      } else {
        rec.rate_after_vb = entering;
      }
    }

    // AN projector for fixed (v_b, β), warm-started from the previous
    // projector. Skipped at β = 1: the AN carries no power there.
    if (state.beta < 1.0) {
      const ANQuadratics q = an_quadratics(cp, state.v_b, state.beta, cfg);
      const GpiResult g =
          gpi_optimize_van(q, state.v_an, cfg.tol.gpi_tol, cfg.tol.gpi_max_iter);
      state.v_an = g.v;
    }
    rec.rate_after_van = secrecy_rate_unclamped(cp, state, cfg);

    // Power split for fixed (v_b, v_an): exact argmax over [0, 1].
    const PAResult pa = optimize_beta(pa_coefficients(cp, state.v_b, state.v_an, cfg));
    state.beta = pa.beta_star;
    rec.rate_after_beta = pa.rate_bits;
    rec.beta = pa.beta_star;

    trace.records.push_back(rec);

    const double increment = rec.rate_after_beta - prev_rate;
    const bool stop = cfg.tol.ais_fractional_stop
                          ? increment < cfg.tol.ais_tol * std::max(prev_rate, DBL_MIN)
                          : increment < cfg.tol.ais_tol;
    prev_rate = rec.rate_after_beta;
    if (stop) {
      trace.converged = true;
      break;
    }
  }

  trace.iterations_used = static_cast<int>(trace.records.size());
  state.secrecy_rate_bits = std::max(0.0, prev_rate);
  return {std::move(state), std::move(trace)};
}

double secure_ee(double rate_bits, const SystemConfig& cfg) {
  return rate_bits / cfg.total_power_watts();
}

}  // namespace dmsec
