// SPDX-License-Identifier: Apache-2.0
// Copyright (C) 2026 dmsec contributors

#include <doctest.h>

#include <cmath>
#include <random>

#include "dmsec/linalg.hpp"
#include "test_util.hpp"

using namespace dmsec;
using testutil::quadratic_form_oracle;
using testutil::random_cvec;
using testutil::random_pd;
using testutil::random_unit;

TEST_CASE("quadratic form: identity and rank-one cases") {
  std::mt19937_64 rng(11);
  const CVec v = random_unit(rng, 5);
  CHECK(HermitianMat::identity(5).quadratic_form(v) == doctest::Approx(1.0).epsilon(1e-12));

  const CVec h = random_cvec(rng, 5);
  HermitianMat outer(5);
  outer.add_outer(h, 1.0);
  const double h2 = norm(h) * norm(h);
  CHECK(outer.quadratic_form(normalized(h)) == doctest::Approx(h2).epsilon(1e-12));
}

TEST_CASE("quadratic form matches the entrywise oracle") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 2 + trial % 6;
    const HermitianMat m = random_pd(rng, n);
    const CVec v = random_cvec(rng, n);
    const double expected = quadratic_form_oracle(m, v);
    CHECK(std::abs(m.quadratic_form(v) - expected) <=
          1e-10 * std::max(1.0, std::abs(expected)));
  }
}

TEST_CASE("quadratic form rejects bad inputs") {
  HermitianMat m(2);
  m.at(0, 1) = Complex(1.0, 0.0);  // deliberately non-Hermitian
  const CVec v = {Complex(1.0 / std::sqrt(2.0), 0.0), Complex(0.0, 1.0 / std::sqrt(2.0))};
  CHECK_THROWS_AS(m.quadratic_form(v), std::domain_error);

  const CVec wrong = {Complex(1.0, 0.0)};
  CHECK_THROWS_AS(HermitianMat::identity(2).quadratic_form(wrong), std::invalid_argument);
}

TEST_CASE("from_entries validates hermitian symmetry") {
  CHECK_THROWS_AS(HermitianMat::from_entries(
                      2, {Complex(1, 0), Complex(1, 0), Complex(0, 0), Complex(1, 0)}),
                  std::invalid_argument);
  const HermitianMat ok = HermitianMat::from_entries(
      2, {Complex(2, 0), Complex(0, 1), Complex(0, -1), Complex(3, 0)});
  CHECK(ok.hermitian_residual() == 0.0);
}

TEST_CASE("solve: identity, scalar matrix, rank-one update") {
  std::mt19937_64 rng(13);
  const CVec b = random_cvec(rng, 6);
  const CVec x_id = HermitianMat::identity(6).solve(b);
  for (std::size_t i = 0; i < b.size(); ++i) CHECK(std::abs(x_id[i] - b[i]) <= 1e-14);

  HermitianMat two(6);
  two.add_shift(2.0);
  const CVec x_two = two.solve(b);
  for (std::size_t i = 0; i < b.size(); ++i)
    CHECK(std::abs(x_two[i] - b[i] / 2.0) <= 1e-14);

  // (I + h·hᴴ)x = h has the solution x = h/2 for unit h.
  const CVec h = random_unit(rng, 6);
  HermitianMat m = HermitianMat::identity(6);
  m.add_outer(h, 1.0);
  const CVec x = m.solve(h);
  for (std::size_t i = 0; i < h.size(); ++i) CHECK(std::abs(x[i] - h[i] / 2.0) <= 1e-12);
}

TEST_CASE("solve meets the relative residual contract") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 3 + trial % 5;
    const HermitianMat m = random_pd(rng, n);
    const CVec b = random_cvec(rng, n);
    const CVec x = m.solve(b);
    CVec residual = m.apply(x);
    add_scaled(residual, b, Complex(-1.0, 0.0));
    CHECK(norm(residual) <= 1e-8 * norm(b));
  }
}

TEST_CASE("solve reports indefinite matrices with the pivot") {
  HermitianMat m(2);
  m.at(0, 0) = Complex(1.0, 0.0);
  m.at(1, 1) = Complex(-1.0, 0.0);
  CHECK_THROWS_WITH_AS(m.solve({Complex(1, 0), Complex(1, 0)}),
                       doctest::Contains("pivot"), std::domain_error);
}

TEST_CASE("rank-one sum agrees with its dense form") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 5;
    RankOneSum s(0.3 + trial * 0.1, n);
    s.add_term(0.7, random_cvec(rng, n));
    s.add_term(1.9, random_cvec(rng, n));
    const HermitianMat dense = s.dense();
    const CVec v = random_cvec(rng, n);

    const CVec a1 = s.apply(v);
    const CVec a2 = dense.apply(v);
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(a1[i] - a2[i]) <= 1e-10);
    CHECK(s.quadratic_form(v) ==
          doctest::Approx(dense.quadratic_form(v)).epsilon(1e-10));

    const CVec x = s.solve(v);
    CVec residual = dense.apply(x);
    add_scaled(residual, v, Complex(-1.0, 0.0));
    CHECK(norm(residual) <= 1e-9 * norm(v));
  }
}

TEST_CASE("rank-one sum solve requires a positive shift") {
  RankOneSum s(0.0, 2);
  s.add_term(1.0, {Complex(1, 0), Complex(0, 0)});
  CHECK_THROWS_AS(s.solve({Complex(1, 0), Complex(1, 0)}), std::domain_error);
}

TEST_CASE("dominant eigenvector: identity and diagonal operators") {
  auto identity_op = [](const CVec& v) { return v; };
  const EigenPair id = dominant_eigenvector(identity_op, 4);
  CHECK(id.converged);
  CHECK(id.value == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(is_unit_norm(id.vector));

  auto diag_op = [](const CVec& v) {
    return CVec{3.0 * v[0], v[1]};
  };
  const EigenPair d = dominant_eigenvector(diag_op, 2);
  CHECK(d.converged);
  CHECK(d.value == doctest::Approx(3.0).epsilon(1e-9));
  CHECK(std::abs(d.vector[0] - Complex(1.0, 0.0)) <= 1e-5);
  CHECK(std::abs(d.vector[1]) <= 1e-5);
}

TEST_CASE("dominant eigenvector beats Monte-Carlo probes on a generalized pair") {
  std::mt19937_64 rng(16);
  const std::size_t n = 4;
  const CVec hb = random_unit(rng, n);
  const CVec he = random_unit(rng, n);
  RankOneSum denom(1.0, n);
  denom.add_term(1.0, he);
  RankOneSum numer(1.0, n);
  numer.add_term(4.0, hb);

  auto op = [&](const CVec& v) { return denom.solve(numer.apply(v)); };
  const EigenPair eig = dominant_eigenvector(op, n);
  CHECK(eig.converged);

  auto ratio = [&](const CVec& v) {
    return numer.quadratic_form(v) / denom.quadratic_form(v);
  };
  const double achieved = ratio(eig.vector);
  CHECK(achieved == doctest::Approx(eig.value).epsilon(1e-8));
  double best = 0.0;
  for (int trial = 0; trial < 100000; ++trial)
    best = std::max(best, ratio(random_unit(rng, n)));
  CHECK(achieved >= best - 1e-6);
}

TEST_CASE("generalized pairs: returned vector maximizes the Rayleigh ratio") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3; ++trial) {
    const std::size_t n = 5;
    const HermitianMat a = random_pd(rng, n);
    const HermitianMat b = random_pd(rng, n);
    auto op = [&](const CVec& v) { return b.solve(a.apply(v)); };
    const EigenPair eig = dominant_eigenvector(op, n);
    const double achieved = a.quadratic_form(eig.vector) / b.quadratic_form(eig.vector);
    for (int probe = 0; probe < 10000; ++probe) {
      const CVec u = random_unit(rng, n);
      CHECK(achieved >= a.quadratic_form(u) / b.quadratic_form(u) - 1e-6);
    }
  }
}

TEST_CASE("power iteration is invariant under positive operator rescaling") {
  std::mt19937_64 rng(18);
  const std::size_t n = 4;
  const HermitianMat a = random_pd(rng, n);
  auto op = [&](const CVec& v) { return a.apply(v); };
  const EigenPair base = dominant_eigenvector(op, n);

  auto op4 = [&](const CVec& v) { return scaled(a.apply(v), Complex(4.0, 0.0)); };
  const EigenPair quad = dominant_eigenvector(op4, n);
  CHECK(quad.value == doctest::Approx(4.0 * base.value).epsilon(1e-10));
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(quad.vector[i] - base.vector[i]) <= 1e-10);

  auto op3 = [&](const CVec& v) { return scaled(a.apply(v), Complex(3.0, 0.0)); };
  const EigenPair tri = dominant_eigenvector(op3, n);
  CHECK(tri.value == doctest::Approx(3.0 * base.value).epsilon(1e-9));
  for (std::size_t i = 0; i < n; ++i)
    CHECK(std::abs(tri.vector[i] - base.vector[i]) <= 1e-8);
}

TEST_CASE("non-convergence returns the best iterate with a flag") {
  // Two nearly equal dominant eigenvalues force a tiny spectral gap.
  auto op = [](const CVec& v) {
    return CVec{v[0], (1.0 - 1e-12) * v[1], 0.5 * v[2]};
  };
  const EigenPair e = dominant_eigenvector(op, 3, 1e-14, 50);
  CHECK_FALSE(e.converged);
  CHECK(e.residual > 0.0);
  CHECK(is_unit_norm(e.vector));
}

TEST_CASE("global phase fix makes the leading entry real non-negative") {
  CVec v = {Complex(0.0, -0.7), Complex(0.5, 0.2)};
  v = normalized(std::move(v));
  fix_global_phase(v);
  CHECK(v[0].imag() == 0.0);
  CHECK(v[0].real() >= 0.0);
  const CVec before = v;
  fix_global_phase(v);  // idempotent
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(v[i] == before[i]);
}

TEST_CASE("normalized rejects the zero vector") {
  CHECK_THROWS_AS(normalized(CVec{Complex(0, 0), Complex(0, 0)}), std::invalid_argument);
}
