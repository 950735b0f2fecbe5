// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/an_design.hpp"

#include <cmath>
#include <stdexcept>

namespace dmsec {

double ANQuadratics::objective(const CVec& v) const {
  return (c.quadratic_form(v) / d.quadratic_form(v)) *
         (e.quadratic_form(v) / f.quadratic_form(v));
}

ANQuadratics an_quadratics(const ChannelPair& cp, const CVec& v_b, double beta,
                           const SystemConfig& cfg) {
  if (!is_unit_norm(v_b))
    throw std::invalid_argument("an_quadratics: v_b is not unit norm");
  if (!(beta >= 0.0 && beta < 1.0))
    throw std::domain_error(
        "an_quadratics: AN power is zero at beta = 1; AN design undefined");
  const double inv_snr = cfg.snr_inverse();
  const double one_minus = 1.0 - beta;
  const double gain_b = std::norm(dot(cp.h_b, v_b));
  const double gain_e = std::norm(dot(cp.h_e, v_b));
  const std::size_t n = cp.h_b.size();

  RankOneSum c((beta * gain_b + inv_snr) / one_minus, n);
  c.add_term(1.0, cp.h_b);
  RankOneSum d((beta * gain_e + inv_snr) / one_minus, n);
  d.add_term(1.0, cp.h_e);
  RankOneSum e(inv_snr / one_minus, n);
  e.add_term(1.0, cp.h_e);
  RankOneSum f(inv_snr / one_minus, n);
  f.add_term(1.0, cp.h_b);
  return ANQuadratics{std::move(c), std::move(d), std::move(e), std::move(f)};
}

namespace {

struct Direction {
  CVec t;  // [C/qC + E/qE]·v
  CVec s;  // [D/qD + F/qF]·v
  double mu = 0.0;
  double residual = 0.0;
};

Direction stationarity(const ANQuadratics& q, const CVec& v) {
  Direction d;
  const double qc = q.c.quadratic_form(v);
  const double qd = q.d.quadratic_form(v);
  const double qe = q.e.quadratic_form(v);
  const double qf = q.f.quadratic_form(v);
  d.t = q.c.apply(v);
  for (Complex& x : d.t) x /= qc;
  add_scaled(d.t, q.e.apply(v), Complex(1.0 / qe, 0.0));
  d.s = q.d.apply(v);
  for (Complex& x : d.s) x /= qd;
  add_scaled(d.s, q.f.apply(v), Complex(1.0 / qf, 0.0));
  d.mu = dot(v, d.t).real() / dot(v, d.s).real();
  double res2 = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) res2 += std::norm(d.t[i] - d.mu * d.s[i]);
  d.residual = std::sqrt(res2);
  return d;
}

}  // namespace

GpiResult gpi_optimize_van(const ANQuadratics& q, const CVec& v_init, double tol,
                           int max_iter) {
  if (!is_unit_norm(v_init))
    throw std::invalid_argument("gpi_optimize_van: v_init is not unit norm");
  GpiResult r;
  CVec v = normalized(v_init);
  double obj = q.objective(v);
  r.objective_trace.push_back(obj);

  for (int it = 0; it < max_iter; ++it) {
    const Direction dir = stationarity(q, v);
    r.iterations = it;
    r.residual = dir.residual;
    if (dir.residual <= tol) {
      r.converged = true;
      break;
    }

    const double qd = q.d.quadratic_form(v);
    const double qf = q.f.quadratic_form(v);
    RankOneSum s_mat(q.d.shift() / qd + q.f.shift() / qf, q.dim());
    for (std::size_t k = 0; k < q.d.term_count(); ++k)
      s_mat.add_term(q.d.term_coef(k) / qd, q.d.term_vec(k));
    for (std::size_t k = 0; k < q.f.term_count(); ++k)
      s_mat.add_term(q.f.term_coef(k) / qf, q.f.term_vec(k));
    const CVec v_raw = normalized(s_mat.solve(dir.t));

    // The raw fixed-point step can overshoot; back off along the segment to
    // the incumbent until the objective stops decreasing.
    bool accepted = false;
    double t = 1.0;
    for (int half = 0; half <= 20; ++half, t *= 0.5) {
      CVec cand = v;
      for (std::size_t i = 0; i < cand.size(); ++i)
        cand[i] += t * (v_raw[i] - v[i]);
      const double nn = norm(cand);
      if (!(nn > 1e-300)) continue;
      for (Complex& x : cand) x /= nn;
      const double cand_obj = q.objective(cand);
      if (cand_obj >= obj) {
        v = std::move(cand);
        obj = cand_obj;
        accepted = true;
        break;
      }
    }
    if (!accepted) break;  // stalled at the incumbent
    r.objective_trace.push_back(obj);
  }

  const Direction fin = stationarity(q, v);
  r.residual = fin.residual;
  if (fin.residual <= tol) r.converged = true;
  r.v = std::move(v);
  fix_global_phase(r.v);
  r.objective = obj;
  return r;
}

CVec max_anlnr_init(const ChannelPair& cp, double beta0, const SystemConfig& cfg) {
  if (!(beta0 >= 0.0 && beta0 < 1.0))
    throw std::invalid_argument("max_anlnr_init: beta0 must lie in [0, 1)");
  const std::size_t n = cp.h_b.size();
  RankOneSum denom(cfg.snr_inverse() / (1.0 - beta0), n);
  denom.add_term(1.0, cp.h_b);
  const CVec& h_e = cp.h_e;
  auto op = [&](const CVec& v) { return denom.solve(scaled(h_e, dot(h_e, v))); };
  const EigenPair eig = dominant_eigenvector(op, n, cfg.tol.power_iter_tol,
                                             cfg.tol.power_iter_max_iter);
  return eig.vector;
}

}  // namespace dmsec
