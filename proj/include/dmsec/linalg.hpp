// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#pragma once

#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace dmsec {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// ‖v‖₂
double norm(const CVec& v);

/// xᴴy (conjugate-linear in the first argument)
Complex dot(const CVec& x, const CVec& y);

/// y += s·x
void add_scaled(CVec& y, const CVec& x, Complex s);

CVec scaled(const CVec& v, Complex s);

/// v / ‖v‖₂; throws std::invalid_argument on the zero vector.
CVec normalized(CVec v);

bool is_unit_norm(const CVec& v, double tol = 1e-9);

/// Multiplies v by a global phase so that its first entry is real and
/// non-negative. If the first entry is negligible relative to the largest
/// one, the largest-magnitude entry is used as the phase reference instead.
CVec& fix_global_phase(CVec& v);

/// Dense Hermitian matrix, row-major storage.
class HermitianMat {
 public:
  explicit HermitianMat(std::size_t n) : n_(n), a_(n * n) {}

  /// Builds from a full row-major entry list; rejects matrices whose
  /// Hermitian residual ‖M − Mᴴ‖_max exceeds 1e-12·‖M‖_max.
  static HermitianMat from_entries(std::size_t n, std::vector<Complex> entries);
  static HermitianMat identity(std::size_t n);

  std::size_t dim() const { return n_; }
  Complex& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  const Complex& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }

  /// M += coef·u·uᴴ
  void add_outer(const CVec& u, double coef);
  /// M += alpha·I
  void add_shift(double alpha);

  CVec apply(const CVec& v) const;

  /// vᴴMv as a real number. The imaginary residue must satisfy
  /// |Im| ≤ 1e-9·|Re| + 1e-12, otherwise a non-Hermitian matrix leaked in
  /// upstream and std::domain_error is thrown.
  double quadratic_form(const CVec& v) const;

  /// Solves Mx = b for positive-definite M via Cholesky. Throws
  /// std::domain_error naming the offending pivot when M is singular or
  /// indefinite.
  CVec solve(const CVec& b) const;

  double max_abs() const;
  double hermitian_residual() const;

 private:
  std::size_t n_;
  std::vector<Complex> a_;
};

double quadratic_form(const HermitianMat& m, const CVec& v);
CVec solve_hermitian(const HermitianMat& m, const CVec& b);

/// shift·I + Σ_k coef_k·u_k·u_kᴴ with real shift and coefficients.
///
/// Every quadratic-form matrix in this project has this shape, so applies,
/// quadratic forms and solves all run in O(N·terms) instead of O(N³); the
/// solve chains Sherman–Morrison updates over the rank-one terms.
class RankOneSum {
 public:
  RankOneSum(double shift, std::size_t dim) : shift_(shift), dim_(dim) {}

  void add_term(double coef, CVec u);

  std::size_t dim() const { return dim_; }
  double shift() const { return shift_; }
  std::size_t term_count() const { return terms_.size(); }
  double term_coef(std::size_t k) const { return terms_[k].coef; }
  const CVec& term_vec(std::size_t k) const { return terms_[k].vec; }

  CVec apply(const CVec& v) const;
  double quadratic_form(const CVec& v) const;

  /// Sherman–Morrison chain solve; requires the matrix to stay positive
  /// definite through every partial sum (shift > 0 and denominators > 0).
  CVec solve(const CVec& b) const;

  HermitianMat dense() const;

 private:
  struct Term {
    double coef;
    CVec vec;
  };
  CVec solve_level(std::size_t k, const CVec& b) const;

  double shift_;
  std::size_t dim_;
  std::vector<Term> terms_;
};

struct EigenPair {
  CVec vector;
  double value = 0.0;
  double residual = 0.0;
  int iterations = 0;
  bool converged = false;
};

/// Power iteration on an arbitrary linear operator with a real dominant
/// eigenvalue of strictly largest modulus. Deterministic: starts from the
/// normalized all-ones vector (perturbed once if that start is already an
/// exact eigenvector). Converges when ‖op(v) − λv‖₂ ≤ tol·max(1, |λ|);
/// on non-convergence the best iterate seen is returned with
/// converged = false. The returned vector has its global phase fixed.
EigenPair dominant_eigenvector(const std::function<CVec(const CVec&)>& op,
                               std::size_t dim, double tol = 1e-10,
                               int max_iter = 10000);

}  // namespace dmsec
