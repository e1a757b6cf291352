#include <doctest.h>

#include <random>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/precision_eval.hpp"
#include "oracles.hpp"

using namespace bk2;

namespace {

constexpr Bits kPrec = 128;

// Exact S_n(x) = (-1)^n B_n^(n)(x)/n! at rational x, from the integral oracle.
Rational exact_scaled(int n, const Rational& x) {
  Rational v = oracle::diagonal_value(n, x) / Rational(factorial(n));
  return n % 2 ? Rational(-v) : v;
}

Real R(const Rational& q, Bits p = kPrec) { return Real(q, p); }

bool within(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace

TEST_CASE("polynomial evaluation at working precision") {
  auto v = eval_poly_precision(1, Complex(R(Rational(1, 2))), kPrec);
  CHECK(v.value.is_zero());
  auto c = eval_poly_precision(2, Complex(Real(kPrec)), kPrec);
  CHECK(within(c.value.re(), R(Rational(5, 6)), ldexp(Real(1L, 64), -100)));
  CHECK(c.error_bound <= ldexp(Real(1L, 64), -100));
  // (1+i)^2 - 2(1+i) + 5/6 = -7/6 exactly.
  auto w = eval_poly_precision(2, Complex(1.0, 1.0, kPrec), kPrec);
  CHECK(within(w.value.re(), R(Rational(-7, 6)), ldexp(Real(1L, 64), -100)));
  CHECK(within(w.value.im(), Real(kPrec), ldexp(Real(1L, 64), -100)));
  auto o = oracle::horner(build_diagonal(9).coeffs(), {0.3L, -1.2L});
  auto x = eval_poly_precision(9, Complex(0.3, -1.2, kPrec), kPrec);
  CHECK(std::abs(static_cast<double>(o.real()) - x.value.re().to_double()) < 1e-9);
  CHECK(std::abs(static_cast<double>(o.imag()) - x.value.im().to_double()) < 1e-9);
}

TEST_CASE("integral representation reproduces exact values") {
  auto a = eval_integral_rep(2, Complex(Real(1L, kPrec)), kPrec);
  CHECK(within(a.value.value.re(), R(Rational(-1, 12)), a.value.error_bound + ldexp(Real(1L, 64), -120)));
  CHECK(a.value.error_bound < ldexp(Real(1L, 64), -100));
  auto b = eval_integral_rep(3, Complex(R(Rational(3, 2))), kPrec);
  CHECK(abs(b.value.value.re()) <= b.value.error_bound);
  CHECK_THROWS_AS(eval_integral_rep(3, Complex(Real(3L, kPrec)), kPrec), DomainError);
  CHECK_THROWS_AS(eval_integral_rep(3, Complex(Real(kPrec)), kPrec), DomainError);
}

TEST_CASE("representation consistency for n up to 60") {
  for (int n = 2; n <= 60; n += 3) {
    for (Rational x : {Rational(3, 10), Rational(17, 10), Rational(n, 2), Rational(Rational(n) - Rational(3, 10))}) {
      // Compare against the exact value at the binary argument actually passed.
      Real xr = R(x);
      auto v = eval_integral_rep(n, Complex(xr), kPrec);
      Real ref = R(exact_scaled(n, xr.to_rational()));
      Real tol = v.value.error_bound + ldexp(abs(ref), -120) + ldexp(Real(1L, 64), -200);
      CHECK_MESSAGE(within(v.value.value.re(), ref, tol), "n=", n, " x=", x.get_str());
      auto h = eval_poly_precision(n, Complex(xr), kPrec);
      Real scaled = h.value.re() / Real(factorial(n), kPrec);
      if (n % 2) scaled = -scaled;
      CHECK(within(scaled, v.value.value.re(), tol + h.error_bound / Real(factorial(n), 64)));
    }
  }
}

TEST_CASE("complex argument matches the polynomial") {
  for (int n : {5, 12, 30}) {
    Complex z(1.3, 0.7, kPrec);
    auto v = eval_integral_rep(n, z, kPrec);
    auto h = eval_poly_precision(n, z, kPrec);
    Complex s = h.value / Real(factorial(n), kPrec);
    if (n % 2) s = -s;
    CHECK(abs(s - v.value.value) <= v.value.error_bound + ldexp(abs(s), -100));
  }
}

TEST_CASE("huge degree stays finite") {
  auto v = eval_integral_rep(1000000, Complex(Real(1L, kPrec)), kPrec);
  CHECK(v.value.value.is_finite());
  CHECK(v.value.value.re().sign() < 0);
  CHECK(v.value.error_bound < ldexp(abs(v.value.value.re()), -90));
}

TEST_CASE("middle pieces") {
  auto [i1, i2] = eval_I1_I2(20, Complex(Real(kPrec)), kPrec);
  CHECK(i2.value.is_zero());
  CHECK(i1.value.re().sign() > 0);
  // n = 2, w = 1/2: pi S_2(3/2) = pi (1/12) / 2.
  Real target = const_pi(kPrec) * R(Rational(1, 24));
  auto m = eval_middle(2, Complex(R(Rational(1, 2))), kPrec);
  CHECK(within(m.value.re(), target, m.error_bound + ldexp(Real(1L, 64), -120)));
  auto [j1, j2] = eval_I1_I2(2, Complex(R(Rational(1, 2))), kPrec);
  // cos(pi/2 + pi) = 0, sin(pi/2 + pi) = -1
  CHECK(within(j2.value.re(), target, j2.error_bound + ldexp(Real(1L, 64), -120)));
  auto m2 = eval_middle(2, Complex(R(Rational(-1, 2))), kPrec);
  CHECK(within(m2.value.re(), target, m2.error_bound + ldexp(Real(1L, 64), -120)));
  auto m1 = eval_middle(1, Complex(Real(kPrec)), kPrec);
  CHECK(abs(m1.value) <= m1.error_bound);
  auto m20 = eval_middle(20, Complex(Real(kPrec)), kPrec);
  Real ref = const_pi(kPrec) * R(exact_scaled(20, 10));
  CHECK(within(m20.value.re(), ref, m20.error_bound + ldexp(abs(ref), -120)));
  CHECK_THROWS_AS(eval_middle(4, Complex(Real(2L, kPrec)), kPrec), DomainError);
}

TEST_CASE("middle form matches the direct form off center") {
  for (int n : {7, 40}) {
    for (double w : {0.3, -2.2}) {
      auto m = eval_middle(n, Complex(Real(w, kPrec)), kPrec);
      auto d = eval_integral_rep(n, Complex(Real(w, kPrec) + Real(n, kPrec) / 2L), kPrec);
      Real lhs = m.value.re() / const_pi(kPrec);
      CHECK(within(lhs, d.value.value.re(), m.error_bound + d.value.error_bound + ldexp(abs(lhs), -110)));
    }
  }
}

TEST_CASE("kernel split identity") {
  std::mt19937_64 rng(20260101);
  std::uniform_real_distribution<double> uu(0.01, 0.99), xz(0.1, 6.0), yz(-2.0, 2.0);
  for (int i = 0; i < 100; ++i) {
    long n = 1 + static_cast<long>(i % 9) * 3;
    Real u(uu(rng), kPrec);
    Complex z(xz(rng), yz(rng), kPrec);
    Real inv = Real(1L, kPrec) / u;
    Complex lhs = kernel_integrand(n, z, u) + kernel_integrand(n, z, inv) / (u * u);
    Real damp = exp(-(log1p(u) * n));
    Complex rhs = (rho_kernel(z, u) + rho_kernel(-z, u) * pow(u, n)) * damp;
    CHECK(abs(lhs - rhs) <= ldexp(abs(rhs), -120));
  }
}

TEST_CASE("doubling precision does not loosen the bound") {
  for (int n : {6, 25}) {
    Complex z(Real(0.7, 64).with_precision(256));
    auto lo = eval_integral_rep(n, z, 128);
    auto hi = eval_integral_rep(n, z, 256);
    CHECK(hi.value.error_bound <= lo.value.error_bound);
  }
}

TEST_CASE("signs at half integers") {
  for (int n = 1; n <= 60; n += 1) {
    auto p = build_diagonal(n);
    for (int k = 1; k <= n / 2; ++k) {
      Rational v = p(Rational(2 * k - 1, 2));
      CHECK(sgn(v) * ((n + k + 1) % 2 ? -1 : 1) > 0);
    }
  }
  for (int n : {9, 30}) {
    for (int k = 1; k <= n / 2; ++k) {
      auto v = eval_integral_rep(n, Complex(R(Rational(2 * k - 1, 2))), kPrec);
      // S_n carries (-1)^n, so the sign of S_n(k - 1/2) is (-1)^(k+1).
      CHECK(v.value.value.re().sign() * ((k + 1) % 2 ? -1 : 1) > 0);
    }
  }
}

TEST_CASE("closed-form derivative") {
  for (int n : {3, 10, 25}) {
    auto d = build_diagonal(n).derivative();
    for (Rational x : {Rational(1, 3), Rational(5, 2), Rational(Rational(n) - Rational(1, 7))}) {
      Rational ex = d(x) / Rational(factorial(n));
      if (n % 2) ex = -ex;
      Real got = scaled_derivative(n, R(x));
      CHECK(within(got, R(ex), ldexp(abs(R(ex)), -110)));
    }
  }
}
