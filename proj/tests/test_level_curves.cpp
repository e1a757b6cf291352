#include <doctest.h>

#include <cmath>
#include <complex>

#include "bk2/errors.hpp"
#include "bk2/level_curves.hpp"

using namespace bk2;

TEST_CASE("level function against complex logarithms") {
  using C = std::complex<double>;
  const C z(0.5, 1.0 / 6);
  for (C xi : {C(0.3, 0.7), C(-1.5, -0.2), C(-0.5, 0.01), C(2, -3)}) {
    double want = std::real(std::log(xi) - z * std::log(1.0 + xi));
    double got = level_function(Complex(xi.real(), xi.imag(), 128), Complex(z.real(), z.imag(), 128)).to_double();
    CHECK(got == doctest::Approx(want).epsilon(1e-13));
  }
}

TEST_CASE("level set for z = 1/2 + i/6") {
  Complex z(Real(0.5, 128), Real(1L, 128) / 6L);
  auto set = level_curves(z, LevelWindow{}, 161, 96);
  CHECK(abs(set.xi0.re() + Real(1.8, 64)) < Real(1e-15, 64));
  CHECK(abs(set.xi0.im() + Real(0.6, 64)) < Real(1e-15, 64));
  REQUIRE(set.points.size() > 100);
  bool near_saddle = false, crosses = false;
  for (size_t i = 0; i + 1 < set.points.size(); ++i) {
    const auto& p = set.points[i];
    if (p.segment < 0) continue;
    CHECK(p.residual <= set.tolerance);
    double dr = p.xi.re().to_double() + 1.8, di = p.xi.im().to_double() + 0.6;
    if (std::hypot(dr, di) < 2 * set.cell) near_saddle = true;
    const auto& q = set.points[i + 1];
    if (q.segment == p.segment) {
      double a = p.xi.im().to_double(), b = q.xi.im().to_double();
      double x = p.xi.re().to_double();
      if (a * b <= 0 && x > -1 && x < 0) crosses = true;
    }
  }
  CHECK(near_saddle);
  CHECK(crosses);
  CHECK(set.points.back().segment == -1);
  CHECK_THROWS_AS(level_curves(Complex(0.5, 0, 64), LevelWindow{}, 10, 64), DomainError);
}
