// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include "dmsec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace dmsec {

namespace {

void require_same_dim(std::size_t a, std::size_t b, const char* what) {
  if (a != b) {
    std::ostringstream os;
    os << what << ": dimension mismatch (" << a << " vs " << b << ")";
    throw std::invalid_argument(os.str());
  }
}

}  // namespace

double norm(const CVec& v) {
  double s = 0.0;
  for (const Complex& x : v) s += std::norm(x);
  return std::sqrt(s);
}

Complex dot(const CVec& x, const CVec& y) {
  require_same_dim(x.size(), y.size(), "dot");
  Complex s(0.0, 0.0);
  for (std::size_t i = 0; i < x.size(); ++i) s += std::conj(x[i]) * y[i];
  return s;
}

void add_scaled(CVec& y, const CVec& x, Complex s) {
  require_same_dim(y.size(), x.size(), "add_scaled");
  for (std::size_t i = 0; i < x.size(); ++i) y[i] += s * x[i];
}

CVec scaled(const CVec& v, Complex s) {
  CVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

CVec normalized(CVec v) {
  const double n = norm(v);
  if (!(n > 0.0)) throw std::invalid_argument("normalized: zero vector");
  for (Complex& x : v) x /= n;
  return v;
}

bool is_unit_norm(const CVec& v, double tol) {
  return std::abs(norm(v) - 1.0) <= tol;
}

CVec& fix_global_phase(CVec& v) {
  if (v.empty()) return v;
  double amax = 0.0;
  std::size_t imax = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double a = std::abs(v[i]);
    if (a > amax) {
      amax = a;
      imax = i;
    }
  }
  if (amax == 0.0) return v;
  const std::size_t pivot = (std::abs(v[0]) >= 1e-12 * amax) ? 0 : imax;
  const double pa = std::abs(v[pivot]);
  const Complex phase = std::conj(v[pivot]) / pa;
  for (Complex& x : v) x *= phase;
  v[pivot] = Complex(pa, 0.0);
  return v;
}

HermitianMat HermitianMat::from_entries(std::size_t n, std::vector<Complex> entries) {
  if (entries.size() != n * n)
    throw std::invalid_argument("HermitianMat::from_entries: wrong entry count");
  HermitianMat m(n);
  m.a_ = std::move(entries);
  const double res = m.hermitian_residual();
  const double scale = m.max_abs();
  if (res > 1e-12 * std::max(scale, 1e-300)) {
    std::ostringstream os;
    os << "HermitianMat::from_entries: not Hermitian, residual " << res;
    throw std::invalid_argument(os.str());
  }
  return m;
}

HermitianMat HermitianMat::identity(std::size_t n) {
  HermitianMat m(n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Complex(1.0, 0.0);
  return m;
}

void HermitianMat::add_outer(const CVec& u, double coef) {
  require_same_dim(u.size(), n_, "HermitianMat::add_outer");
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c) a_[r * n_ + c] += coef * u[r] * std::conj(u[c]);
}

void HermitianMat::add_shift(double alpha) {
  for (std::size_t i = 0; i < n_; ++i) a_[i * n_ + i] += alpha;
}

CVec HermitianMat::apply(const CVec& v) const {
  require_same_dim(v.size(), n_, "HermitianMat::apply");
  CVec out(n_, Complex(0.0, 0.0));
  for (std::size_t r = 0; r < n_; ++r) {
    Complex s(0.0, 0.0);
    const Complex* row = &a_[r * n_];
    for (std::size_t c = 0; c < n_; ++c) s += row[c] * v[c];
    out[r] = s;
  }
  return out;
}

double HermitianMat::quadratic_form(const CVec& v) const {
  const Complex q = dot(v, apply(v));
  if (std::abs(q.imag()) > 1e-9 * std::abs(q.real()) + 1e-12) {
    std::ostringstream os;
    os << "quadratic_form: non-negligible imaginary part " << q.imag()
       << " (matrix not Hermitian?)";
    throw std::domain_error(os.str());
  }
  return q.real();
}

CVec HermitianMat::solve(const CVec& b) const {
  require_same_dim(b.size(), n_, "HermitianMat::solve");
  // In-place Cholesky M = L·Lᴴ on a copy, then forward/back substitution.
  std::vector<Complex> l = a_;
  double max_diag = 0.0;
  for (std::size_t i = 0; i < n_; ++i) max_diag = std::max(max_diag, std::abs(l[i * n_ + i]));
  for (std::size_t k = 0; k < n_; ++k) {
    double d = l[k * n_ + k].real();
    for (std::size_t j = 0; j < k; ++j) d -= std::norm(l[k * n_ + j]);
    if (!(d > 1e-14 * std::max(max_diag, 1e-300))) {
      std::ostringstream os;
      os << "HermitianMat::solve: matrix not positive definite (pivot " << k
         << " = " << d << ")";
      throw std::domain_error(os.str());
    }
    const double lkk = std::sqrt(d);
    l[k * n_ + k] = Complex(lkk, 0.0);
    for (std::size_t r = k + 1; r < n_; ++r) {
      Complex s = l[r * n_ + k];
      for (std::size_t j = 0; j < k; ++j) s -= l[r * n_ + j] * std::conj(l[k * n_ + j]);
      l[r * n_ + k] = s / lkk;
    }
  }
  // L y = b
  CVec y(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    Complex s = b[r];
    for (std::size_t j = 0; j < r; ++j) s -= l[r * n_ + j] * y[j];
    y[r] = s / l[r * n_ + r].real();
  }
  // Lᴴ x = y
  CVec x(n_);
  for (std::size_t ri = n_; ri-- > 0;) {
    Complex s = y[ri];
    for (std::size_t j = ri + 1; j < n_; ++j) s -= std::conj(l[j * n_ + ri]) * x[j];
    x[ri] = s / l[ri * n_ + ri].real();
  }
  return x;
}

double HermitianMat::max_abs() const {
  double m = 0.0;
  for (const Complex& x : a_) m = std::max(m, std::abs(x));
  return m;
}

double HermitianMat::hermitian_residual() const {
  double m = 0.0;
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = 0; c < n_; ++c)
      m = std::max(m, std::abs(a_[r * n_ + c] - std::conj(a_[c * n_ + r])));
  return m;
}

double quadratic_form(const HermitianMat& m, const CVec& v) { return m.quadratic_form(v); }

CVec solve_hermitian(const HermitianMat& m, const CVec& b) { return m.solve(b); }

void RankOneSum::add_term(double coef, CVec u) {
  require_same_dim(u.size(), dim_, "RankOneSum::add_term");
  terms_.push_back(Term{coef, std::move(u)});
}

CVec RankOneSum::apply(const CVec& v) const {
  require_same_dim(v.size(), dim_, "RankOneSum::apply");
  CVec out = scaled(v, Complex(shift_, 0.0));
  for (const Term& t : terms_) add_scaled(out, t.vec, t.coef * dot(t.vec, v));
  return out;
}

double RankOneSum::quadratic_form(const CVec& v) const {
  require_same_dim(v.size(), dim_, "RankOneSum::quadratic_form");
  double n2 = 0.0;
  for (const Complex& x : v) n2 += std::norm(x);
  double q = shift_ * n2;
  for (const Term& t : terms_) q += t.coef * std::norm(dot(t.vec, v));
  return q;
}

CVec RankOneSum::solve_level(std::size_t k, const CVec& b) const {
  if (k == 0) {
    if (!(shift_ > 0.0))
      throw std::domain_error("RankOneSum::solve: shift must be positive");
    return scaled(b, Complex(1.0 / shift_, 0.0));
  }
  const Term& t = terms_[k - 1];
  CVec z = solve_level(k - 1, b);
  CVec w = solve_level(k - 1, t.vec);
  const Complex uz = dot(t.vec, z);
  const double den = 1.0 + t.coef * dot(t.vec, w).real();
  if (!(std::abs(den) > 1e-14)) {
    std::ostringstream os;
    os << "RankOneSum::solve: singular update (denominator " << den << " at term "
       << k - 1 << ")";
    throw std::domain_error(os.str());
  }
  add_scaled(z, w, -t.coef * uz / den);
  return z;
}

CVec RankOneSum::solve(const CVec& b) const {
  require_same_dim(b.size(), dim_, "RankOneSum::solve");
  return solve_level(terms_.size(), b);
}

HermitianMat RankOneSum::dense() const {
  HermitianMat m(dim_);
  m.add_shift(shift_);
  for (const Term& t : terms_) m.add_outer(t.vec, t.coef);
  return m;
}

EigenPair dominant_eigenvector(const std::function<CVec(const CVec&)>& op,
                               std::size_t dim, double tol, int max_iter) {
  if (dim == 0) throw std::invalid_argument("dominant_eigenvector: empty dimension");
  CVec v(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0));

  auto rayleigh_residual = [](const CVec& x, const CVec& w, double lambda) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += std::norm(w[i] - lambda * x[i]);
    return std::sqrt(s);
  };

  // If the deterministic start is already an exact eigenvector it may belong
  // to a non-dominant eigenvalue; nudge it once.
  {
    CVec w = op(v);
    const double lambda = dot(v, w).real();
    if (rayleigh_residual(v, w, lambda) <= 1e-15 * std::max(1.0, std::abs(lambda))) {
      v[0] += Complex(1e-3, 0.0);
      v = normalized(v);
    }
  }

  EigenPair best;
  best.residual = std::numeric_limits<double>::infinity();

  double lambda = 0.0;
  for (int it = 0; it <= max_iter; ++it) {
    CVec w = op(v);
    lambda = dot(v, w).real();
    const double res = rayleigh_residual(v, w, lambda);
    if (res < best.residual) {
      best.vector = v;
      best.value = lambda;
      best.residual = res;
      best.iterations = it;
    }
    if (res <= tol * std::max(1.0, std::abs(lambda))) {
      EigenPair out{v, lambda, res, it, true};
      fix_global_phase(out.vector);
      return out;
    }
    const double wn = norm(w);
    if (!(wn > 1e-300)) {
      // Operator annihilated the iterate (start orthogonal to the range of a
      // low-rank operator); restart from a perturbed vector.
      v[0] += Complex(1e-3, 0.0);
      v = normalized(v);
      continue;
    }
    for (Complex& x : w) x /= wn;
    v = std::move(w);
  }

  best.converged = false;
  fix_global_phase(best.vector);
  return best;
}

}  // namespace dmsec
