// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/power_allocation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace dmsec {

PAQuadratic make_pa_quadratic(double i, double j, double k, double l, double m) {
  if (!(k > 0.0)) throw std::invalid_argument("PAQuadratic: k must be > 0");
  PAQuadratic q;
  q.i = i;
  q.j = j;
  q.k = k;
  q.l = l;
  q.m = m;
  const double a = i * m - j * l;
  q.delta = k * k * (i - l) * (i - l) - k * a * (j - m);
  q.roots.clear();
  if (a != 0.0 && q.delta >= 0.0) {
    // Roots of aβ² + 2·bb·β + c with bb = k(i−l), c = k(j−m), written in the
    // cancellation-safe form r₁ = qs/a, r₂ = c/qs.
    const double bb = k * (i - l);
    const double c = k * (j - m);
    const double sd = std::sqrt(q.delta);
    const double qs = -(bb + std::copysign(sd, bb));
    if (qs != 0.0) {
      q.roots.push_back(qs / a);
      q.roots.push_back(c / qs);
    } else {
      q.roots.push_back(0.0);  // double root at zero
    }
    std::erase_if(q.roots, [](double r) { return !(r > 0.0 && r < 1.0); });
    std::sort(q.roots.begin(), q.roots.end());
    q.roots.erase(std::unique(q.roots.begin(), q.roots.end()), q.roots.end());
  }
  return q;
}

PAQuadratic pa_coefficients(const ChannelPair& cp, const CVec& v_b, const CVec& v_an,
                            const SystemConfig& cfg) {
  if (!is_unit_norm(v_b))
    throw std::invalid_argument("pa_coefficients: v_b is not unit norm");
  if (!is_unit_norm(v_an))
    throw std::invalid_argument("pa_coefficients: v_an is not unit norm");
  const double inv_snr = cfg.snr_inverse();
  const double b_an = std::norm(dot(cp.h_b, v_an));
  const double e_an = std::norm(dot(cp.h_e, v_an));
  const double b_cm = std::norm(dot(cp.h_b, v_b));
  const double e_cm = std::norm(dot(cp.h_e, v_b));

  const double i = e_an * (b_an - b_cm);
  const double j = (b_cm - b_an) * (e_an + inv_snr) - e_an * (b_an + inv_snr);
  const double k = (b_an + inv_snr) * (e_an + inv_snr);
  const double l = b_an * (e_an - e_cm);
  const double m = (e_cm - e_an) * (b_an + inv_snr) - b_an * (e_an + inv_snr);
  return make_pa_quadratic(i, j, k, l, m);
}

double pa_phi(const PAQuadratic& q, double beta) {
  const double num = (q.i * beta + q.j) * beta + q.k;
  const double den = (q.l * beta + q.m) * beta + q.k;
  return num / den;
}

const char* pa_branch_name(PABranch b) {
  switch (b) {
    case PABranch::flat: return "flat";
    case PABranch::linear_interior: return "linear_interior";
    case PABranch::linear_endpoint: return "linear_endpoint";
    case PABranch::quad_both_interior: return "quad_both_interior";
    case PABranch::quad_one_interior: return "quad_one_interior";
    case PABranch::quad_no_interior: return "quad_no_interior";
    case PABranch::monotone_increasing: return "monotone_increasing";
    case PABranch::monotone_decreasing: return "monotone_decreasing";
  }
  return "?";
}

PAResult optimize_beta(const PAQuadratic& q) {
  const double a = q.i * q.m - q.j * q.l;
  PAResult r;

  if (a == 0.0 && q.i == q.l && q.j == q.m) {
    // φ ≡ 1: every split is equally (non-)secret.
    r.beta_star = 0.5;
    r.rate_bits = 0.0;
    r.branch = PABranch::flat;
    return r;
  }

  std::vector<double> candidates;
  if (a == 0.0) {
    double b3 = std::numeric_limits<double>::quiet_NaN();
    if (q.i != q.l) b3 = (q.m - q.j) / (2.0 * (q.i - q.l));
    if (b3 > 0.0 && b3 < 1.0) {
      candidates = {0.0, b3, 1.0};
      r.branch = PABranch::linear_interior;
    } else {
      candidates = {0.0, 1.0};
      r.branch = PABranch::linear_endpoint;
    }
  } else if (q.delta >= 0.0) {
    candidates.push_back(0.0);
    for (double root : q.roots) candidates.push_back(root);
    candidates.push_back(1.0);
    r.branch = q.roots.size() == 2   ? PABranch::quad_both_interior
               : q.roots.size() == 1 ? PABranch::quad_one_interior
                                     : PABranch::quad_no_interior;
  } else {
    // No stationary point anywhere: φ is strictly monotone and the sign of
    // im−jl gives the direction.
    if (a > 0.0) {
      r.branch = PABranch::monotone_increasing;
      r.beta_star = 1.0;
    } else {
      r.branch = PABranch::monotone_decreasing;
      r.beta_star = 0.0;
    }
    r.rate_bits = std::log2(pa_phi(q, r.beta_star));
    return r;
  }

  double best_phi = -std::numeric_limits<double>::infinity();
  for (double beta : candidates) best_phi = std::max(best_phi, pa_phi(q, beta));
  double best_beta = 0.0;
  for (double beta : candidates)
    if (pa_phi(q, beta) >= best_phi - 1e-12) best_beta = std::max(best_beta, beta);

  r.beta_star = best_beta;
  r.rate_bits = std::log2(pa_phi(q, best_beta));
  return r;
}

}  // namespace dmsec
