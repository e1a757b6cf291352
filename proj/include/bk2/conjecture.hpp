#pragma once

// Exact experiments around the reality of the zeros: the modulus identity
//   |B_n^(n)(x+iy)|^2 = |B_n^(n)(x)|^2 + sum_k alpha_{n,k}(x) y^{2k}
//                       + sum_k beta_{n,k}(x) y^{2n-2k},
// positivity of alpha and beta, and the lower Hessenberg matrix whose
// characteristic polynomial is B_{n+1}^(n+1).

#include <string>
#include <vector>

#include "bk2/polynomial.hpp"
#include "bk2/real.hpp"

namespace bk2 {

// (-1)^k sum_{l=0}^{2k} (-1)^l C(n,l) C(n,2k-l) B_{n-l}^(n) B_{n-2k+l}^(n), 1 <= 2k <= n.
ExactPolynomial alpha_poly(int n, int k);
// (-1)^k sum_{l=0}^{2k} (-1)^l C(n,l) C(n,2k-l) B_l^(n) B_{2k-l}^(n), 0 <= 2k <= n-1.
ExactPolynomial beta_poly(int n, int k);

// LHS - RHS of the modulus identity at x + iy, exact.
Rational modulus_identity_check(int n, const Rational& x, const Rational& y);

// Real roots of p by Sturm sequences: disjoint intervals (lo, hi], one
// distinct root each, refined to width <= 2^-bits. Exact roots come back
// as lo == hi.
struct RootInterval {
  Rational lo, hi;
};
std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p, long bits = 40);

struct PolyScan {
  std::string name;  // "alpha" or "beta"
  int n = 0, k = 0;
  Rational grid_min;          // smallest exact value on the grid
  Rational grid_argmin;
  double global_min = 0;      // value at the best refined critical point
  double global_argmin = 0;
  bool certified = false;     // sign verdict covers all of R, not just the grid
  bool nonnegative = true;    // false: a counterexample was found
  Rational counterexample_x;  // set when nonnegative is false
};

struct PositivityReport {
  int n = 0, k = 0;
  std::vector<PolyScan> scans;  // alpha_{n,k} and/or beta_{n,k} when admissible
};

// Degrees up to this bound get the Sturm-certified verdict.
inline constexpr int kCertifiedPositivityMaxN = 20;

PositivityReport positivity_scan(int n, int k, const std::vector<Rational>& x_grid);

// The (n+1)x(n+1) lower Hessenberg matrix A_n, entries [row][col].
std::vector<std::vector<Rational>> hessenberg_matrix(int n);

// det(x I - A_n) by fraction-free elimination at n+2 integer nodes and
// exact interpolation.
ExactPolynomial hessenberg_charpoly(int n);

struct EigenReport {
  int n = 0;
  std::vector<Real> eigenvalues;  // ascending
  Real max_deviation{64};         // against the zeros of B_{n+1}^(n+1)
  int iterations = 0;
};

// Shifted QR on A_n in floating point at a precision covering its
// non-normality.
EigenReport hessenberg_eigen_check(int n, Bits prec);

// JSON for a batch of scans, including the certified/sampled boundary.
std::string conjecture_report_json(const std::vector<PositivityReport>& reports);

}  // namespace bk2
