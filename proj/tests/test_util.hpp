// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors
//
// Deterministic generators and independent oracle helpers shared by the
// test binaries. Everything here stays independent of the implementation
// paths it is used to check.

#pragma once

#include <cmath>
#include <random>

#include "dmsec/channel.hpp"
#include "dmsec/linalg.hpp"

namespace testutil {

using dmsec::Complex;
using dmsec::CVec;

inline CVec random_cvec(std::mt19937_64& rng, std::size_t n) {
  std::normal_distribution<double> g(0.0, 1.0);
  CVec v(n);
  for (Complex& x : v) x = Complex(g(rng), g(rng));
  return v;
}

inline CVec random_unit(std::mt19937_64& rng, std::size_t n) {
  return dmsec::normalized(random_cvec(rng, n));
}

/// Dense random Hermitian positive-definite matrix G·Gᴴ + shift·I.
inline dmsec::HermitianMat random_pd(std::mt19937_64& rng, std::size_t n,
                                     double shift = 0.5) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<Complex> gm(n * n);
  for (Complex& x : gm) x = Complex(g(rng), g(rng));
  dmsec::HermitianMat m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      Complex s(0.0, 0.0);
      for (std::size_t t = 0; t < n; ++t) s += gm[r * n + t] * std::conj(gm[c * n + t]);
      m.at(r, c) = s;
    }
  m.add_shift(shift);
  return m;
}

/// Entrywise double-loop quadratic form, written independently from the
/// library path.
inline double quadratic_form_oracle(const dmsec::HermitianMat& m, const CVec& v) {
  Complex s(0.0, 0.0);
  for (std::size_t r = 0; r < m.dim(); ++r)
    for (std::size_t c = 0; c < m.dim(); ++c)
      s += std::conj(v[r]) * m.at(r, c) * v[c];
  return s.real();
}

/// Derivative-free hill climb on the unit sphere, used to polish the best
/// Monte-Carlo sample into a local-maximum estimate of an objective.
template <typename Objective>
CVec polish_on_sphere(const Objective& f, CVec v, int max_rounds = 400) {
  double step = 0.25;
  double fv = f(v);
  for (int round = 0; round < max_rounds && step > 1e-12; ++round) {
    bool improved = false;
    for (std::size_t d = 0; d < v.size(); ++d) {
      for (int part = 0; part < 2; ++part) {
        for (double sign : {1.0, -1.0}) {
          CVec cand = v;
          if (part == 0)
            cand[d] += Complex(sign * step, 0.0);
          else
            cand[d] += Complex(0.0, sign * step);
          cand = dmsec::normalized(std::move(cand));
          const double fc = f(cand);
          if (fc > fv) {
            v = std::move(cand);
            fv = fc;
            improved = true;
          }
        }
      }
    }
    if (!improved) step *= 0.5;
  }
  return v;
}

}  // namespace testutil
