// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/nsp.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "dmsec/power_allocation.hpp"

namespace dmsec {

NspResult nsp_solution(const ChannelPair& cp, const SystemConfig& cfg) {
  const std::size_t n = cp.h_b.size();
  if (n < 2)
    throw std::invalid_argument("nsp_solution: NSP undefined: empty null space");

  NspResult r;
  r.state.v_b = cp.h_b;
  fix_global_phase(r.state.v_b);

  // Project h_e onto the orthogonal complement of h_b (h_b is unit norm).
  CVec proj = cp.h_e;
  add_scaled(proj, cp.h_b, -dot(cp.h_b, cp.h_e));
  const double pn = norm(proj);
  if (pn > 1e-9) {
    for (Complex& x : proj) x /= pn;
    r.state.v_an = std::move(proj);
  } else {
    // h_e parallel to h_b: any unit vector orthogonal to h_b serves. Start
    // from the basis vector where h_b is smallest and orthogonalize.
    r.degenerate = true;
    std::size_t kmin = 0;
    double amin = std::abs(cp.h_b[0]);
    for (std::size_t k = 1; k < n; ++k) {
      const double a = std::abs(cp.h_b[k]);
      if (a < amin) {
        amin = a;
        kmin = k;
      }
    }
    CVec u(n, Complex(0.0, 0.0));
    u[kmin] = Complex(1.0, 0.0);
    add_scaled(u, cp.h_b, -dot(cp.h_b, u));
    r.state.v_an = normalized(std::move(u));
  }
  fix_global_phase(r.state.v_an);

  const PAResult pa =
      optimize_beta(pa_coefficients(cp, r.state.v_b, r.state.v_an, cfg));
  r.state.beta = pa.beta_star;
  r.state.secrecy_rate_bits = std::max(0.0, pa.rate_bits);
  return r;
}

NspResult nsp_solution(const SystemConfig& cfg) {
  cfg.ensure_valid();
  return nsp_solution(build_channels(cfg), cfg);
}

}  // namespace dmsec
