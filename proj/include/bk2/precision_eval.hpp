#pragma once

// Arbitrary-precision evaluation of the diagonal polynomials B_n^(n).
//
// Large-n work goes through the scaled function
//   S_n(z) = (-1)^n B_n^(n)(z) / n!,
// which has the integral representation (u = e^x)
//   S_n(z) = (1/pi) int_R e^{xz} (1+e^x)^{-n} (pi cos(pi z) - x sin(pi z)) / (pi^2 + x^2) dx
// for 0 < Re z < n, so n! never has to be formed.

#include <utility>

#include "bk2/real.hpp"

namespace bk2 {

struct PrecisionValue {
  Real value;
  Real error_bound{64};
  Bits precision_bits = 0;
  // Set when cancellation leaves |value| below 2^(-prec/2) of the largest
  // partial term: the absolute bound holds, relative accuracy does not.
  bool near_zero = false;
};

struct PrecisionComplex {
  Complex value;
  Real error_bound{64};
  Bits precision_bits = 0;
  bool near_zero = false;
};

struct ScaledDiagonalValue {
  long n = 0;
  Complex z;
  PrecisionComplex value;  // S_n(z)
};

// Working precision from BK2_PREC_BITS, else 128; never below 64.
Bits default_precision();

// Extra bits carried by the guard evaluation.
inline constexpr Bits kGuardBits = 32;

// B_n^(n)(z) by Horner on the exact coefficients. n <= 512.
PrecisionComplex eval_poly_precision(int n, const Complex& z, Bits prec);

// S_n(z) for 0 < Re z < n by double-exponential quadrature.
ScaledDiagonalValue eval_integral_rep(long n, const Complex& z, Bits prec);

// The symmetric pieces around the center n/2, for |Re w| < n/2:
//   I1 = 2^{-n} int_R e^{xw} sech^n(x/2) pi / (pi^2 + x^2) dx
//   I2 = 2^{-n} int_R e^{xw} sech^n(x/2) x  / (pi^2 + x^2) dx
// so that pi S_n(w + n/2) = I1 cos(pi w + pi n/2) - I2 sin(pi w + pi n/2).
std::pair<PrecisionComplex, PrecisionComplex> eval_I1_I2(long n, const Complex& w, Bits prec);

// pi S_n(w + n/2) assembled from I1 and I2.
PrecisionComplex eval_middle(long n, const Complex& w, Bits prec);

// (cos, sin) of pi w + pi n/2, with n mod 4 reduced exactly.
std::pair<Complex, Complex> shifted_cos_sin(const Complex& w, long n);

// dS_n/dx at real 0 < x < n, in closed form from the product formula:
//   -sin(pi x) Gamma(x) Gamma(n - x) / (pi Gamma(n)).
Real scaled_derivative(long n, const Real& x);

// Integrand of the representation in the u variable, and the kernel
//   rho_z(u) = u^{z-1} (pi cos(pi z) - log(u) sin(pi z)) / (pi^2 + log^2 u).
Complex kernel_integrand(long n, const Complex& z, const Real& u);
Complex rho_kernel(const Complex& z, const Real& u);

}  // namespace bk2
