#include <doctest.h>

#include <nlohmann/json.hpp>

#include "bk2/conjecture.hpp"
#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "oracles.hpp"

using namespace bk2;

namespace {

std::vector<Rational> grid(int lo, int hi, int den) {
  std::vector<Rational> g;
  for (int i = lo * den; i <= hi * den; ++i) g.emplace_back(i, den);
  for (auto& q : g) q.canonicalize();
  return g;
}

}  // namespace

TEST_CASE("modulus identity at n = 1") {
  // |x + iy - 1/2|^2 at x = 0, y = 1.
  auto p = build_diagonal(1);
  auto [re, im] = eval_exact_complex(p, Rational(0), Rational(1));
  CHECK(re * re + im * im == Rational(5, 4));
  CHECK(modulus_identity_check(1, Rational(0), Rational(1)) == 0);
}

TEST_CASE("modulus identity holds exactly for n <= 30") {
  const std::vector<Rational> xs{Rational(-3, 2), Rational(0), Rational(1, 3), Rational(7, 2), Rational(11)};
  const std::vector<Rational> ys{Rational(1, 2), Rational(1), Rational(5, 3)};
  for (int n = 1; n <= 30; ++n)
    for (const auto& x : xs)
      for (const auto& y : ys) CHECK(modulus_identity_check(n, x, y) == 0);
}

TEST_CASE("alpha and beta basics") {
  for (int n = 1; n <= 12; ++n) CHECK(beta_poly(n, 0) == ExactPolynomial::constant(1));
  CHECK_THROWS_AS(alpha_poly(3, 2), DomainError);
  CHECK_THROWS_AS(beta_poly(3, 2), DomainError);
  // alpha_{2,1} = 4 (x - 1)^2 - 2 (x^2 - 2x + 5/6) = 2x^2 - 4x + 7/3.
  CHECK(alpha_poly(2, 1) == ExactPolynomial({Rational(7, 3), Rational(-4), Rational(2)}));
  auto rep = positivity_scan(2, 1, grid(-2, 4, 8));
  REQUIRE(rep.scans.size() == 1);
  CHECK(rep.scans[0].certified);
  CHECK(rep.scans[0].nonnegative);
}

TEST_CASE("Sturm isolation") {
  // x^3 - x: exact roots at -1, 0, 1.
  auto r = isolate_real_roots(ExactPolynomial({Rational(0), Rational(-1), Rational(0), Rational(1)}), 30);
  REQUIRE(r.size() == 3);
  for (size_t i = 0; i < 3; ++i) {
    Rational target = static_cast<long>(i) - 1;
    CHECK(r[i].lo <= target);
    CHECK(r[i].hi >= target);
  }
  // (x^2 - 2)(x - 1/3)^2: double root counted once.
  ExactPolynomial q = ExactPolynomial({Rational(-2), Rational(0), Rational(1)}) *
                      (ExactPolynomial({Rational(-1, 3), Rational(1)}) * ExactPolynomial({Rational(-1, 3), Rational(1)}));
  auto rq = isolate_real_roots(q, 40);
  REQUIRE(rq.size() == 3);
  CHECK(rq[0].lo * rq[0].lo >= 2);
  CHECK(rq[0].hi * rq[0].hi <= 2);
  CHECK(rq[1].lo <= Rational(1, 3));
  CHECK(rq[1].hi >= Rational(1, 3));
  CHECK((rq[2].hi - rq[2].lo) * (Rational(1) << 40) <= 1);
  // Zeros of B_n^(n) are simple and real.
  for (int n : {5, 12}) CHECK(isolate_real_roots(build_diagonal(n)).size() == static_cast<size_t>(n));
  CHECK(isolate_real_roots(ExactPolynomial({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST_CASE("certified scans for n <= 8 and sampled scans beyond") {
  for (int n = 1; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto rep = positivity_scan(n, k, grid(-1, n + 1, 4));
      for (const auto& s : rep.scans) {
        CHECK(s.certified);
        // A certified nonnegative verdict must agree with every grid value.
        if (s.nonnegative) CHECK(s.grid_min >= 0);
        CHECK(s.global_min <= s.grid_min.get_d() + 1e-12);
      }
    }
  auto big = positivity_scan(24, 3, grid(0, 24, 2));
  for (const auto& s : big.scans) CHECK_FALSE(s.certified);
  auto js = nlohmann::json::parse(conjecture_report_json({big}));
  CHECK(js["certified_max_n"] == kCertifiedPositivityMaxN);
  CHECK(js["scans"].size() == big.scans.size());
}

TEST_CASE("Hessenberg characteristic polynomial") {
  CHECK(hessenberg_charpoly(0) == build_diagonal(1));
  CHECK(hessenberg_charpoly(1) == ExactPolynomial({Rational(5, 6), Rational(-2), Rational(1)}));
  auto a = hessenberg_matrix(5);
  REQUIRE(a.size() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = i + 2; j < 6; ++j) CHECK(a[i][j] == 0);
  for (int n : {5, 17, 40}) {
    auto want = oracle::diagonal_coeffs(n + 1);
    CHECK(hessenberg_charpoly(n).coeffs() == want);
  }
}

TEST_CASE("Hessenberg eigenvalues match the zeros") {
  for (int n : {1, 6, 20}) {
    auto rep = hessenberg_eigen_check(n, 128);
    CHECK(rep.eigenvalues.size() == static_cast<size_t>(n + 1));
    CHECK(rep.max_deviation < ldexp(Real(1L, 64), -60));
  }
}
