#pragma once

// Exact construction of the generalized Bernoulli polynomials B_n^(a)(x),
// generated by (t/(e^t-1))^a e^{xt}, and of the second-kind family
// b_n(x) = B_n^(n)(x+1).

#include <utility>
#include <vector>

#include "bk2/polynomial.hpp"

namespace bk2 {

// Exact construction refuses degrees above this; coefficient growth makes
// larger n impractical and the integral evaluators take over.
inline constexpr int kMaxExactDegree = 512;

struct Bernoulli2Number {
  int index;
  Rational value;
};

// B_n^(n)(x) = integral over y in [0,1] of (x+y-1)(x+y-2)...(x+y-n).
ExactPolynomial build_diagonal(int n);

// B_n^(a)(x) from the power series of (t/(e^t-1))^a.
ExactPolynomial build_generalized(int n, const Rational& a);

// B_0^(a), ..., B_N^(a) sharing one series expansion.
std::vector<ExactPolynomial> build_generalized_family(int N, const Rational& a);

// b_n(x) = B_n^(n)(x+1).
ExactPolynomial build_shifted_second_kind(int n);

// b_0..b_N, b_n = B_n^(n)(1), from the series t/log(1+t).
std::vector<Bernoulli2Number> bernoulli2_numbers(int N);
std::vector<Rational> bernoulli2_values(int N);

// B_0^(0)..B_N^(N) through the three-term-plus-convolution recursion
// B_{n+1} = (x-n) B_n - sum_k C(n,k) b_{n-k+1}/(n-k+1) B_k.
std::vector<ExactPolynomial> build_by_recursion(int N);

Rational eval_exact(const ExactPolynomial& p, const Rational& x);
// Exact value at the Gaussian rational re + i im, as (real, imaginary).
std::pair<Rational, Rational> eval_exact_complex(const ExactPolynomial& p, const Rational& re, const Rational& im);

// (x-1)(x-2)...(x-m)
ExactPolynomial falling_product(int m);

// Exact binomial coefficient.
mpz_class binomial(long n, long k);
mpz_class factorial(long n);

}  // namespace bk2
