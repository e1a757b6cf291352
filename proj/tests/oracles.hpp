#pragma once

// Reference computations used only by the tests. Each one takes a route
// deliberately different from the library code it checks.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <vector>

namespace oracle {

using Q = mpq_class;

// Value of integral_0^1 prod_{k=1}^n (x + y - k) dy by expanding the product
// in y with x fixed and integrating each power.
inline Q diagonal_value(int n, const Q& x) {
  std::vector<Q> py{Q(1)};
  for (int k = 1; k <= n; ++k) {
    Q c = x - k;
    std::vector<Q> next(py.size() + 1, Q(0));
    for (size_t i = 0; i < py.size(); ++i) {
      next[i] += py[i] * c;
      next[i + 1] += py[i];
    }
    py = std::move(next);
  }
  Q s = 0;
  for (size_t i = 0; i < py.size(); ++i) s += py[i] / Q(static_cast<long>(i + 1));
  return s;
}

// Coefficients of B_n^(n) by Lagrange interpolation of diagonal_value at
// x = 0..n (Newton divided differences).
inline std::vector<Q> diagonal_coeffs(int n) {
  std::vector<Q> xs, d;
  for (int i = 0; i <= n; ++i) {
    xs.emplace_back(i);
    d.push_back(diagonal_value(n, Q(i)));
  }
  for (int j = 1; j <= n; ++j)
    for (int i = n; i >= j; --i) d[i] = (d[i] - d[i - 1]) / (xs[i] - xs[i - j]);
  std::vector<Q> c(static_cast<size_t>(n) + 1, Q(0));
  for (int i = n; i >= 0; --i) {
    // c = c * (x - xs[i]) + d[i]
    std::vector<Q> next(c.size(), Q(0));
    for (size_t k = 0; k + 1 < c.size(); ++k) {
      next[k + 1] += c[k];
      next[k] -= c[k] * xs[i];
    }
    next[0] += d[i];
    c = std::move(next);
  }
  return c;
}

// Double-precision complex Horner with long double accumulation.
inline std::complex<long double> horner(const std::vector<Q>& c, std::complex<long double> z) {
  std::complex<long double> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + static_cast<long double>(it->get_d());
  return acc;
}

}  // namespace oracle
