#include "bk2/rational_series.hpp"

#include <stdexcept>

namespace bk2::series {

QSeries mul(const QSeries& a, const QSeries& b) {
  const size_t n = std::min(a.size(), b.size());
  QSeries r(n, mpq_class(0));
  for (size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; i + j < n; ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

QSeries inverse(const QSeries& a) {
  if (a.empty() || a[0] == 0) throw std::domain_error("series inverse needs a nonzero constant term");
  QSeries r(a.size(), mpq_class(0));
  r[0] = 1 / a[0];
  for (size_t n = 1; n < a.size(); ++n) {
    mpq_class s = 0;
    for (size_t k = 1; k <= n; ++k) s += a[k] * r[n - k];
    r[n] = -s / a[0];
  }
  return r;
}

QSeries log(const QSeries& a) {
  if (a.empty() || a[0] != 1) throw std::domain_error("series log needs constant term 1");
  // b' a = a'  =>  n b_n = n a_n - sum_{k=1}^{n-1} k b_k a_{n-k}
  QSeries b(a.size(), mpq_class(0));
  for (size_t n = 1; n < a.size(); ++n) {
    mpq_class s = a[n] * static_cast<long>(n);
    for (size_t k = 1; k < n; ++k) s -= b[k] * a[n - k] * static_cast<long>(k);
    b[n] = s / static_cast<long>(n);
  }
  return b;
}

QSeries exp(const QSeries& a) {
  if (!a.empty() && a[0] != 0) throw std::domain_error("series exp needs constant term 0");
  // e' = a' e  =>  n e_n = sum_{k=1}^n k a_k e_{n-k}
  QSeries e(a.size(), mpq_class(0));
  if (e.empty()) return e;
  e[0] = 1;
  for (size_t n = 1; n < a.size(); ++n) {
    mpq_class s = 0;
    for (size_t k = 1; k <= n; ++k)
      if (a[k] != 0) s += a[k] * e[n - k] * static_cast<long>(k);
    e[n] = s / static_cast<long>(n);
  }
  return e;
}

QSeries power(const QSeries& a, const mpq_class& r) {
  QSeries l = log(a);
  for (auto& q : l) q *= r;
  return exp(l);
}

}  // namespace bk2::series
