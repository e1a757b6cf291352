#include "bk2/exact_core.hpp"

#include <map>
#include <mutex>
#include <string>

#include "bk2/errors.hpp"
#include "bk2/rational_series.hpp"

namespace bk2 {

namespace {

void check_degree(int n) {
  if (n < 0) throw DomainError("degree must be non-negative");
  if (n > kMaxExactDegree)
    throw DomainError("exact construction is capped at n = " + std::to_string(kMaxExactDegree));
}

// First N+1 coefficients of (t/(e^t-1))^a.
series::QSeries order_series(int N, const Rational& a) {
  series::QSeries q(static_cast<size_t>(N) + 1);
  mpz_class f = 1;
  for (int k = 0; k <= N; ++k) {
    f *= k + 1;
    q[static_cast<size_t>(k)] = mpq_class(1, f);  // (e^t-1)/t = sum t^k/(k+1)!
    q[static_cast<size_t>(k)].canonicalize();
  }
  return series::power(q, -a);
}

ExactPolynomial from_order_series(int n, const series::QSeries& A) {
  // n! [t^n] A(t) e^{xt} = sum_j n!/j! A_{n-j} x^j
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  mpz_class ratio = 1;  // n!/j! for j = n, n-1, ...
  for (int j = n; j >= 0; --j) {
    c[static_cast<size_t>(j)] = A[static_cast<size_t>(n - j)] * ratio;
    ratio *= j;
  }
  return ExactPolynomial(std::move(c));
}

}  // namespace

mpz_class binomial(long n, long k) {
  mpz_class r;
  if (k < 0 || n < 0 || k > n) return 0;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

mpz_class factorial(long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

ExactPolynomial falling_product(int m) {
  std::vector<mpz_class> p{1};
  for (int k = 1; k <= m; ++k) {
    p.emplace_back(0);
    for (size_t j = p.size() - 1; j > 0; --j) p[j] = p[j - 1] - k * p[j];
    p[0] *= -k;
  }
  std::vector<Rational> c(p.begin(), p.end());
  return ExactPolynomial(std::move(c));
}

ExactPolynomial build_diagonal(int n) {
  check_degree(n);
  static std::mutex mu;
  static std::map<int, ExactPolynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  // Integrate P(t) = (t-1)...(t-n) over [x, x+1]: with Q' = P,
  // coeff_i = sum_{j>=i} p_j C(j+1, i)/(j+1), over the common denominator lcm(1..n+1).
  std::vector<mpz_class> p = falling_product(n).integer_coeffs();
  mpz_class L = 1;
  for (long j = 2; j <= n + 1; ++j) mpz_lcm_ui(L.get_mpz_t(), L.get_mpz_t(), static_cast<unsigned long>(j));
  std::vector<mpz_class> w(static_cast<size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) w[static_cast<size_t>(j)] = p[static_cast<size_t>(j)] * (L / (j + 1));
  std::vector<Rational> c(static_cast<size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) {
    mpz_class s = 0;
    for (int j = i; j <= n; ++j) s += w[static_cast<size_t>(j)] * binomial(j + 1, i);
    c[static_cast<size_t>(i)] = mpq_class(s, L);
    c[static_cast<size_t>(i)].canonicalize();
  }
  ExactPolynomial out(std::move(c));
  std::lock_guard lock(mu);
  cache.emplace(n, out);
  return out;
}

ExactPolynomial build_generalized(int n, const Rational& a) {
  check_degree(n);
  return from_order_series(n, order_series(n, a));
}

std::vector<ExactPolynomial> build_generalized_family(int N, const Rational& a) {
  check_degree(N);
  auto A = order_series(N, a);
  std::vector<ExactPolynomial> out;
  out.reserve(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) out.push_back(from_order_series(n, A));
  return out;
}

ExactPolynomial build_shifted_second_kind(int n) { return build_diagonal(n).shift(Rational(1)); }

std::vector<Rational> bernoulli2_values(int N) {
  if (N < 0) throw DomainError("N must be non-negative");
  // log(1+t)/t = sum (-1)^k t^k/(k+1); invert and multiply by n!.
  series::QSeries l(static_cast<size_t>(N) + 1);
  for (int k = 0; k <= N; ++k) {
    l[static_cast<size_t>(k)] = mpq_class(k % 2 ? -1 : 1, k + 1);
    l[static_cast<size_t>(k)].canonicalize();
  }
  auto inv = series::inverse(l);
  std::vector<Rational> b(static_cast<size_t>(N) + 1);
  mpz_class f = 1;
  for (int n = 0; n <= N; ++n) {
    if (n > 0) f *= n;
    b[static_cast<size_t>(n)] = inv[static_cast<size_t>(n)] * f;
  }
  return b;
}

std::vector<Bernoulli2Number> bernoulli2_numbers(int N) {
  auto v = bernoulli2_values(N);
  std::vector<Bernoulli2Number> out;
  for (int n = 0; n <= N; ++n) out.push_back({n, v[static_cast<size_t>(n)]});
  return out;
}

std::vector<ExactPolynomial> build_by_recursion(int N) {
  check_degree(N);
  auto b = bernoulli2_values(N + 1);
  std::vector<ExactPolynomial> B{ExactPolynomial::constant(1)};
  for (int n = 0; n < N; ++n) {
    ExactPolynomial next = ExactPolynomial({Rational(-n), Rational(1)}) * B[static_cast<size_t>(n)];
    for (int k = 0; k <= n; ++k) {
      Rational w = Rational(binomial(n, k)) * b[static_cast<size_t>(n - k + 1)] / (n - k + 1);
      next -= B[static_cast<size_t>(k)] * w;
    }
    B.push_back(std::move(next));
  }
  return B;
}

Rational eval_exact(const ExactPolynomial& p, const Rational& x) { return p(x); }

std::pair<Rational, Rational> eval_exact_complex(const ExactPolynomial& p, const Rational& re, const Rational& im) {
  Rational a = 0, b = 0;
  for (int i = p.degree(); i >= 0; --i) {
    Rational na = a * re - b * im + p.coeff(i);
    b = a * im + b * re;
    a = na;
  }
  return {a, b};
}

}  // namespace bk2
