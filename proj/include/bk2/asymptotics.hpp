#pragma once

// Asymptotic expansions of B_n^(n) and of its zeros, with the coefficient
// machinery behind them. Throughout, S_n(z) = (-1)^n B_n^(n)(z)/n! and
// L = log n.

#include <string>
#include <vector>

#include "bk2/polynomial.hpp"
#include "bk2/precision_eval.hpp"
#include "bk2/real.hpp"

namespace bk2 {

// ---- coefficient tables ----------------------------------------------------

// pi_0..pi_M with sum pi_m w^m = 1/Gamma(1+w).
std::vector<Real> recip_gamma_maclaurin(int M, Bits prec);

// s[k][l] for 0 <= l <= k <= K: signed Stirling numbers of the first kind,
// z(z-1)...(z-k+1) = sum_l s(k,l) z^l.
using StirlingTable = std::vector<std::vector<mpz_class>>;
StirlingTable stirling_first(int K);

// X_0^(k)..X_M^(k): Taylor coefficients of 1/Gamma(1-k+eps) in eps.
std::vector<Real> x_table_row(int k, int M, Bits prec);

// c_k(z) = d^k/dz^k 1/Gamma(1-z) by trapezoid averaging on a circle.
PrecisionComplex c_k_eval(int k, const Complex& z, Bits prec);
// c_0(z)..c_K(z) from one set of circle samples.
std::vector<PrecisionComplex> c_k_all(int K, const Complex& z, Bits prec);

struct CompleteExpansion {
  Complex approx;   // sum_{k<=K} c_k(z)/L^{k+1}, approximating n^z S_n(z)
  Real next_term;   // |c_{K+1}(z)|/L^{K+2}
};
CompleteExpansion complete_expansion_eval(long n, const Complex& z, int K, Bits prec);

// ---- series in a gauge -----------------------------------------------------

enum class Gauge { OneOverLogN, OneOverN, OneOverSqrtNShifted };

std::string gauge_name(Gauge g);

// value(n) = n_multiplier * n + base + sign * sum_{i=1}^{order} coeffs[i-1] g(n)^i
// with g(n) = 1/log n, 1/n or 1/sqrt(n + 1/2).
struct AsymptoticSeries {
  Gauge gauge = Gauge::OneOverN;
  std::string anchor;
  long n_multiplier = 0;
  Real base{64};
  int sign = 1;
  std::vector<Real> coeffs;
  int truncation_order = 0;
  Bits prec = 0;

  Real gauge_value(const Real& n) const;
  Real evaluate(const Real& n) const { return evaluate(n, truncation_order); }
  Real evaluate(const Real& n, int order) const;
  std::string to_json() const;
};

// x_k^(n) = k - sum_i e_i/L^i; coeffs are e_1..e_order.
AsymptoticSeries small_zero_expansion(int k, int order, Bits prec);
// x_{n-k+1}^(n) = n - k + sum_i e_i/L^i.
AsymptoticSeries large_zero_expansion(int k, int order, Bits prec);

// ---- alpha regime ----------------------------------------------------------

// tau_alpha = log(alpha/(1-alpha)).
Real tau_alpha(const Real& alpha);

// Leading term of sqrt(n) S_n(z + alpha n) / (alpha^{alpha n} (1-alpha)^{(1-alpha) n}).
Complex alpha_leading(long n, const Complex& z, const Real& alpha, Bits prec);

// lim (x_{floor(alpha n)+l}^(n) - floor(alpha n)) = l - 1 + arccot(tau/pi)/pi,
// arccot taking values in (0, pi).
Real alpha_zero_limit(const Real& alpha, long ell, Bits prec);

// ---- center regime ---------------------------------------------------------

// omega_j^(k) = (2j)-th derivative at 0 of x^{2k+1} / ((pi^2+x^2) log^{k+1/2} cosh(x/2)).
Real omega_coeff(int k, int j, Bits prec);

// Coefficients in z (index = power) of p_k, even of degree 2k, and q_k, odd
// of degree 2k+1.
std::vector<Real> p_poly(int k, Bits prec);
std::vector<Real> q_poly(int k, Bits prec);

// Approximates 2^n sqrt(n) S_n(z + n/2) by
//   sqrt(pi) cos(pi z + pi n/2) sum_k p_k(z)/(4^k k! n^k)
//   - sin(pi z + pi n/2)/sqrt(pi) sum_k q_k(z)/(2 4^k k! n^{k+1}), k = 0..K.
Complex middle_expansion_eval(long n, const Complex& z, int K, Bits prec);

enum class Parity { Even, Odd };

// Even: x_{n+k}^(2n) = n + (k - 1/2) + sum_i c_i/n^i.
// Odd:  x_{n+k+1}^(2n+1) = n + (k + 1/2) + sum_i c_i/n^i.
AsymptoticSeries middle_zero_expansion(int k, Parity parity, int order, Bits prec);

// (-1)^n sqrt(2n) D_{2n}/(2n)! with D_{2n} = 4^n B_{2n}^(2n)(n), in 1/n.
AsymptoticSeries dnumber_expansion(int terms, Bits prec);
// K_{2n} (-1)^{n+1} 2^{2n-1} pi^{5/2} n^{3/2} with K_{2n} = B_{2n}^(2n)(n-1/2)/(2n)!, in 1/n.
AsymptoticSeries gauss_encke_expansion(int terms, Bits prec);

// ---- away from [0,1] -------------------------------------------------------

// Saddle-point data of the phase f(xi, z) = log xi - z log(1+xi).
Complex saddle_point(const Complex& z);  // 1/(z-1)
Complex saddle_phase(const Complex& xi, const Complex& z);
Complex saddle_amplitude(const Complex& xi);  // 1/((1+xi) log(1+xi))

// Leading approximation of B_n^(n)(nz)/n! for z off [0,1]:
//   (z-1)^n (z/(z-1))^{nz+1/2} / (sqrt(2 pi n) z log(z/(z-1))), principal branches.
Complex nonosc_leading(long n, const Complex& z, Bits prec);

// Cauchy transform log(z/(z-1)) of the uniform measure on [0,1].
Complex cauchy_transform_limit(const Complex& z);

}  // namespace bk2
