#include <doctest.h>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "oracles.hpp"

using namespace bk2;

namespace {

ExactPolynomial poly(std::initializer_list<const char*> coeffs) {
  std::vector<Rational> v;
  for (const char* c : coeffs) v.push_back(parse_rational(c));
  return ExactPolynomial(std::move(v));
}

const std::vector<Rational> kSamplePoints = {Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1),
                                             Rational(-1), Rational(3)};

}  // namespace

TEST_CASE("diagonal polynomials for small n") {
  CHECK(build_diagonal(0) == ExactPolynomial::constant(1));
  CHECK(build_diagonal(2) == poly({"5/6", "-2", "1"}));
  CHECK(build_diagonal(3) == poly({"-9/4", "6", "-9/2", "1"}));
}

TEST_CASE("diagonal coefficients match interpolation of the defining integral") {
  for (int n : {1, 4, 7, 12, 20}) {
    auto ref = oracle::diagonal_coeffs(n);
    CHECK(build_diagonal(n).coeffs() == ref);
  }
}

TEST_CASE("generalized polynomials") {
  CHECK(build_generalized(1, 1) == poly({"-1/2", "1"}));
  CHECK(build_generalized(2, 2) == poly({"5/6", "-2", "1"}));
  CHECK(build_generalized(1, 0) == poly({"0", "1"}));
  // B_2^(1) is the classical x^2 - x + 1/6.
  CHECK(build_generalized(2, 1) == poly({"1/6", "-1", "1"}));
  // Order -1 gives x^n shifted moments: (e^t-1)/t e^{xt} -> ((x+1)^{n+1}-x^{n+1})/(n+1).
  CHECK(build_generalized(2, -1) == poly({"1/3", "1", "1"}));
}

TEST_CASE("shifted second kind polynomials") {
  CHECK(build_shifted_second_kind(0) == ExactPolynomial::constant(1));
  CHECK(build_shifted_second_kind(1) == poly({"1/2", "1"}));
  CHECK(build_shifted_second_kind(2) == poly({"-1/6", "0", "1"}));
}

TEST_CASE("Bernoulli numbers of the second kind") {
  auto b = bernoulli2_numbers(12);
  REQUIRE(b.size() == 13);
  CHECK(b[0].value == 1);
  CHECK(b[2].value == Rational(-1, 6));
  CHECK(b[3].value == Rational(1, 4));
  for (int n = 0; n <= 12; ++n) CHECK(b[n].value == oracle::diagonal_value(n, 1));
}

TEST_CASE("recursion reproduces the diagonal family") {
  auto r1 = build_by_recursion(1);
  REQUIRE(r1.size() == 2);
  CHECK(r1[0] == ExactPolynomial::constant(1));
  CHECK(r1[1] == poly({"-1/2", "1"}));
  CHECK(build_by_recursion(0).size() == 1);
  auto r = build_by_recursion(40);
  for (int n = 0; n <= 40; ++n) {
    CHECK(r[n] == build_diagonal(n));
    CHECK(build_generalized(n, n) == build_diagonal(n));
  }
}

TEST_CASE("exact evaluation") {
  CHECK(eval_exact(build_diagonal(2), 1) == Rational(-1, 6));
  CHECK(eval_exact(build_diagonal(3), Rational(3, 2)) == 0);
  CHECK(eval_exact(build_diagonal(2), 0) == Rational(5, 6));
}

TEST_CASE("difference and derivative identities") {
  for (int n = 1; n <= 40; n += 3) {
    for (int a : {0, 1, 2, n}) {
      auto fam = build_generalized_family(n, a);
      auto lower = build_generalized_family(n - 1, a - 1);
      const auto& p = fam[n];
      for (const auto& x : kSamplePoints) {
        CHECK(p(x + 1) == p(x) + n * lower[n - 1](x));
      }
      CHECK(p.derivative() == fam[n - 1] * Rational(n));
      // Reflection: B_n^(a)(-x) = (-1)^n B_n^(a)(x + a).
      auto lhs = p.reflect();
      auto rhs = p.shift(a) * Rational(n % 2 ? -1 : 1);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("product formula, diagonal symmetry, sign alternation") {
  for (int n = 1; n <= 40; ++n) CHECK(build_generalized(n - 1, n) == falling_product(n - 1));
  for (int n = 0; n <= 40; ++n) {
    auto p = build_diagonal(n);
    // p(n - x) = (-1)^n p(x)
    CHECK(p.reflect().shift(Rational(-n)) == p * Rational(n % 2 ? -1 : 1));
  }
  for (int n = 0; n <= 60; ++n) {
    auto p = build_diagonal(n);
    for (int k = 0; k <= n; ++k) CHECK(sgn(p(k)) * ((n + k) % 2 ? -1 : 1) > 0);
  }
}

TEST_CASE("degree cap and negative degree") {
  CHECK_THROWS_AS(build_diagonal(kMaxExactDegree + 1), DomainError);
  CHECK_THROWS_AS(build_diagonal(-1), DomainError);
}

TEST_CASE("polynomial JSON round trip") {
  auto p = build_diagonal(5);
  auto q = ExactPolynomial::from_json(p.to_json());
  CHECK(p == q);
  CHECK(build_diagonal(2).to_json() == R"({"coeffs":["5/6","-2","1"],"degree":2})");
}
