#include "bk2/special.hpp"

#include <mutex>
#include <vector>

#include "bk2/rational_series.hpp"

namespace bk2 {

Rational bernoulli_number(int k) {
  static std::mutex mu;
  static std::vector<Rational> table;
  std::lock_guard lock(mu);
  if (k >= static_cast<int>(table.size())) {
    // t/(e^t-1) = 1 / sum t^j/(j+1)!; grow in chunks to amortize.
    size_t n = static_cast<size_t>(std::max(2 * k, 64)) + 1;
    series::QSeries q(n);
    mpz_class f = 1;
    for (size_t j = 0; j < n; ++j) {
      f *= static_cast<unsigned long>(j + 1);
      q[j] = mpq_class(1, f);
      q[j].canonicalize();
    }
    auto inv = series::inverse(q);
    table.assign(n, Rational(0));
    mpz_class g = 1;
    for (size_t j = 0; j < n; ++j) {
      if (j > 0) g *= static_cast<unsigned long>(j);
      table[j] = inv[j] * g;
    }
  }
  return table[static_cast<size_t>(k)];
}

Complex lgamma_stirling(const Complex& w) {
  const Bits p = w.precision();
  const Real need = Real(0.12 * static_cast<double>(p) + 4.0, 53);
  // Shift W = w + m until |W| is large enough for the asymptotic series.
  Complex W = w;
  Complex poch(Real(1L, p));
  long m = 0;
  while (abs(W).with_precision(53) < need) {
    poch *= W;
    W.re() += 1L;
    ++m;
  }
  Complex logW = log(W);
  Complex s = (W - ldexp(Real(1L, p), -1)) * logW - W;
  s.re() += ldexp(log(ldexp(const_pi(p), 1)), -1);
  Complex inv = Complex(Real(1L, p)) / W;
  Complex inv2 = inv * inv;
  Complex powW = inv;
  const long tiny = -static_cast<long>(p) - 8;
  for (int j = 1; j < 4 * p; ++j) {
    Rational c = bernoulli_number(2 * j) / (2L * j * (2L * j - 1));
    Complex term = powW * Real(c, p);
    s += term;
    if (abs(term).exponent() - std::max(abs(s).exponent(), 0L) < tiny) break;
    powW *= inv2;
  }
  if (m > 0) s -= log(poch);
  return s;
}

Real recip_gamma(const Real& x) {
  if (x.sign() <= 0 && mpfr_integer_p(x.get())) return Real(x.precision());
  Bits p = x.precision() + 16;
  Real g = gamma(x.with_precision(p));
  return (Real(1L, p) / g).with_precision(x.precision());
}

Complex recip_gamma(const Complex& w) {
  const Bits out = w.precision();
  if (w.im().is_zero()) return Complex(recip_gamma(w.re()));
  const Bits p = out + 16;
  Complex z = w.with_precision(p);
  if (z.re() < ldexp(Real(1L, p), -1)) {
    // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
    Complex g = exp(lgamma_stirling(1L - z));
    return (sin_pi(z) * g / const_pi(p)).with_precision(out);
  }
  return exp(-lgamma_stirling(z)).with_precision(out);
}

}  // namespace bk2
