#include "bk2/real_series.hpp"

namespace bk2::rseries {

RSeries zeros(size_t n, Bits prec) { return RSeries(n, Real(prec)); }

RSeries mul(const RSeries& a, const RSeries& b) {
  const size_t n = a.size();
  RSeries r = zeros(n, a.empty() ? 64 : a[0].precision());
  for (size_t i = 0; i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RSeries add(const RSeries& a, const RSeries& b) {
  RSeries r = a;
  for (size_t i = 0; i < r.size() && i < b.size(); ++i) r[i] += b[i];
  return r;
}

RSeries sub(const RSeries& a, const RSeries& b) {
  RSeries r = a;
  for (size_t i = 0; i < r.size() && i < b.size(); ++i) r[i] -= b[i];
  return r;
}

RSeries scale(const RSeries& a, const Real& s) {
  RSeries r = a;
  for (auto& v : r) v *= s;
  return r;
}

std::vector<RSeries> powers(const RSeries& a, int m) {
  Bits p = a.empty() ? 64 : a[0].precision();
  std::vector<RSeries> out;
  RSeries one = zeros(a.size(), p);
  if (!one.empty()) one[0] = Real(1L, p);
  out.push_back(one);
  for (int i = 1; i <= m; ++i) out.push_back(mul(out.back(), a));
  return out;
}

RSeries compose_poly(const std::vector<Real>& c, const RSeries& a) {
  Bits p = a.empty() ? 64 : a[0].precision();
  RSeries acc = zeros(a.size(), p);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    acc = mul(acc, a);
    if (!acc.empty()) acc[0] += *it;
  }
  return acc;
}

namespace {

// sum over m of sign^m x^{2m+offset}/(2m+offset)! for x = s a, a[0] = 0.
RSeries trig_of(const RSeries& a, const Real& s, int offset) {
  Bits p = a.empty() ? 64 : a[0].precision();
  const size_t n = a.size();
  RSeries x = scale(a, s);
  RSeries acc = zeros(n, p);
  RSeries term = zeros(n, p);
  if (n == 0) return acc;
  term[0] = Real(1L, p);
  // term = x^j / j!
  for (size_t j = 0; j < n + 2; ++j) {
    if (j > 0) term = scale(mul(term, x), Real(1L, p) / Real(static_cast<long>(j), p));
    if (static_cast<int>(j % 2) == offset) {
      long m = static_cast<long>(j) / 2;
      if (m % 2) acc = sub(acc, term);
      else acc = add(acc, term);
    }
  }
  return acc;
}

}  // namespace

RSeries sin_of(const RSeries& a, const Real& s) { return trig_of(a, s, 1); }
RSeries cos_of(const RSeries& a, const Real& s) { return trig_of(a, s, 0); }

RSeries solve_formal(const std::function<RSeries(const RSeries&)>& F, const Real& D, int order, Bits prec) {
  RSeries eps = zeros(static_cast<size_t>(order) + 1, prec);
  for (int pass = 0; pass <= order; ++pass) {
    RSeries f = F(eps);
    for (size_t i = 0; i < eps.size(); ++i) eps[i] -= f[i] / D;
    eps[0] = Real(prec);
  }
  return eps;
}

}  // namespace bk2::rseries
