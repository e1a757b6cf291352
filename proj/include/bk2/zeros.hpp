#pragma once

// Real zeros of B_n^(n), complex zeros of the attractor family
// B_n^(1-l+l n)(n z), and statistics of the normalized zero sets.

#include <cstdint>
#include <string>
#include <vector>

#include "bk2/polynomial.hpp"
#include "bk2/precision_eval.hpp"
#include "bk2/real.hpp"

namespace bk2 {

struct CertifiedZero {
  long k = 0;
  // The sign of B_n^(n) differs at lo and hi.
  Rational lo;
  Rational hi;
  Real value{64};
  Real error_radius{64};
};

struct ZeroSet {
  long n = 0;
  std::vector<CertifiedZero> zeros;
};

// All n zeros by exact dyadic bisection from the half-interval brackets and
// Newton polish at prec; error_radius <= 2^(-prec/2). n <= 512.
ZeroSet real_zeros_exact(int n, Bits prec);

// The k-th zero for large n from the scaled integral evaluators.
CertifiedZero real_zero_large_n(long n, long k, Bits prec);

// All roots of p by Aberth-Ehrlich iteration; seeded perturbation of the
// starting circle, re-validated at higher precision.
std::vector<PrecisionComplex> complex_zeros(const ExactPolynomial& p, Bits prec, std::uint64_t seed = 0x5eed);

// z -> B_n^(1 - lambda + lambda n)(n z).
ExactPolynomial attractor_polynomial(int n, const Rational& lambda);

struct MeasureSample {
  long n = 0;
  std::vector<Real> points;  // x_k / n
  Real ks_distance{64};      // sup distance of the empirical cdf to U[0,1]
  // (1/n) sum_k 1/(z - x_k/n)
  Complex cauchy_transform(const Complex& z) const;
};

MeasureSample measure_stats(const ZeroSet& zs);

// n,k,lo,hi,value,err with 30 significant digits.
void write_zeros_csv(const std::string& path, const std::vector<ZeroSet>& sets);
std::vector<ZeroSet> read_zeros_csv(const std::string& path);

struct AttractorCloud {
  Rational lambda;
  int n = 0;
  std::vector<PrecisionComplex> roots;
};
// lambda,n,re,im
void write_attractor_csv(const std::string& path, const std::vector<AttractorCloud>& clouds);

}  // namespace bk2
