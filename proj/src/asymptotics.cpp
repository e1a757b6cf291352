#include "bk2/asymptotics.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <nlohmann/json.hpp>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/rational_series.hpp"
#include "bk2/real_series.hpp"

namespace bk2 {

namespace {

constexpr int kMaxLogOrder = 12;
constexpr int kMaxInverseOrder = 6;

Real R(long v, Bits p) { return Real(v, p); }
Real Rq(const Rational& q, Bits p) { return Real(q, p); }

Real factorial_real(long k, Bits p) { return Real(factorial(k), p); }

}  // namespace

std::vector<Real> recip_gamma_maclaurin(int M, Bits prec) {
  if (M < 0) throw DomainError("recip_gamma_maclaurin: M must be >= 0");
  const Bits wp = prec + 16 + M;
  Real g = const_euler(wp);
  std::vector<Real> z(static_cast<size_t>(M) + 1, Real(wp));
  for (int j = 2; j <= M; ++j) z[j] = zeta(static_cast<unsigned long>(j), wp);
  std::vector<Real> pi(static_cast<size_t>(M) + 1, Real(wp));
  pi[0] = R(1, wp);
  for (int m = 1; m <= M; ++m) {
    Real acc = g * pi[m - 1];
    for (int j = 2; j <= m; ++j) {
      Real t = z[j] * pi[m - j];
      if (j % 2) acc += t;
      else acc -= t;
    }
    pi[m] = acc / static_cast<long>(m);
  }
  for (auto& v : pi) v = v.with_precision(prec);
  return pi;
}

StirlingTable stirling_first(int K) {
  if (K < 0) throw DomainError("stirling_first: K must be >= 0");
  StirlingTable s(static_cast<size_t>(K) + 1);
  s[0] = {mpz_class(1)};
  for (int k = 0; k < K; ++k) {
    auto& next = s[k + 1];
    next.assign(static_cast<size_t>(k) + 2, mpz_class(0));
    for (int l = 0; l <= k + 1; ++l) {
      if (l >= 1) next[l] += s[k][l - 1];
      if (l <= k) next[l] -= mpz_class(k) * s[k][l];
    }
  }
  return s;
}

std::vector<Real> x_table_row(int k, int M, Bits prec) {
  if (k < 1 || M < 0) throw DomainError("x_table_row: need k >= 1, M >= 0");
  const Bits wp = prec + 16 + 2 * M;
  auto pi = recip_gamma_maclaurin(M, wp);
  auto s = stirling_first(k);
  std::vector<Real> x(static_cast<size_t>(M) + 1, Real(prec));
  for (int m = 0; m <= M; ++m) {
    Real acc(wp);
    for (int i = 1; i <= std::min(k, m); ++i) acc += Real(s[k][i], wp) * pi[m - i];
    x[m] = acc.with_precision(prec);
  }
  return x;
}

namespace {

constexpr int kMaxNodeDoublings = 3;
const double kCircleRadius = 0.5;

// k! / (N r^k) sum_j f(z + r w^j) w^{-jk}, k = 0..K, with f = 1/Gamma(1 - .).
std::vector<Complex> circle_coefficients(int K, const Complex& z, long N, Bits wp, Real& fmax) {
  const Real r(kCircleRadius, wp);
  const Complex zz = z.with_precision(wp);
  std::vector<Complex> sum(static_cast<size_t>(K) + 1, Complex(wp));
  fmax = Real(64);
  const Real two_pi = ldexp(const_pi(wp), 1);
  for (long j = 0; j < N; ++j) {
    Real theta = two_pi * Real(j, wp) / N;
    Complex w(cos(theta), sin(theta));
    Complex f = recip_gamma(Complex(1L - (zz + w * r)));
    fmax = max(fmax, abs(f).with_precision(64));
    // accumulate f * conj(w)^k
    Complex wc = conj(w);
    Complex t = f;
    for (int k = 0; k <= K; ++k) {
      sum[k] += t;
      t *= wc;
    }
  }
  for (int k = 0; k <= K; ++k) sum[k] = sum[k] * (factorial_real(k, wp) / (pow(r, k) * Real(N, wp)));
  return sum;
}

}  // namespace

std::vector<PrecisionComplex> c_k_all(int K, const Complex& z, Bits prec) {
  if (K < 0) throw DomainError("c_k: k must be >= 0");
  const double log2_kfact = std::lgamma(K + 1.0) / std::log(2.0);
  const Bits wp = prec + kGuardBits + static_cast<Bits>(std::ceil(log2_kfact)) + K;
  long N = 64L * (K + 1);
  for (int d = 0; d <= kMaxNodeDoublings; ++d, N *= 2) {
    Real fa(64), fb(64);
    auto a = circle_coefficients(K, z, N, wp, fa);
    auto b = circle_coefficients(K, z, 2 * N, wp, fb);
    std::vector<PrecisionComplex> out;
    bool ok = true;
    for (int k = 0; k <= K && ok; ++k) {
      // Size of the largest summand, the scale rounding errors live on.
      Real scale = fb * factorial_real(k, 64) / pow(Real(kCircleRadius, 64), k);
      Real err = abs(a[k] - b[k]).with_precision(64) + ldexp(scale, -static_cast<long>(wp) + 8);
      Real mag = abs(b[k]).with_precision(64);
      const long slack = -static_cast<long>(prec) + 16;
      bool relative_ok = err <= ldexp(mag, slack);
      bool near_zero = mag < ldexp(scale, -static_cast<long>(prec) / 2);
      if (!relative_ok && !(near_zero && err <= ldexp(scale, slack))) ok = false;
      out.push_back({b[k].with_precision(prec), err, wp, near_zero && !relative_ok});
    }
    if (!ok) continue;
    // c_0 directly: exact zeros of 1/Gamma(1-z) stay exact.
    Complex c0 = recip_gamma(Complex(1L - z.with_precision(wp)));
    out[0] = {c0.with_precision(prec), ldexp(abs(c0).with_precision(64), -static_cast<long>(prec) - 8), wp, false};
    return out;
  }
  throw PrecisionExhausted("c_k: circle sums did not agree");
}

PrecisionComplex c_k_eval(int k, const Complex& z, Bits prec) {
  if (k < 0) throw DomainError("c_k: k must be >= 0");
  if (k == 0) {
    Complex c0 = recip_gamma(Complex(1L - z.with_precision(prec + 16)));
    return {c0.with_precision(prec), ldexp(abs(c0).with_precision(64), -static_cast<long>(prec) - 8), prec + 16, false};
  }
  return c_k_all(k, z, prec).back();
}

CompleteExpansion complete_expansion_eval(long n, const Complex& z, int K, Bits prec) {
  if (n < 3 || K < 0) throw DomainError("complete_expansion_eval: need n >= 3, K >= 0");
  auto c = c_k_all(K + 1, z, prec);
  Real inv_l = Real(1L, prec) / log(Real(n, prec));
  Complex acc(prec);
  Real g = inv_l;
  for (int k = 0; k <= K; ++k) {
    acc += c[k].value * g;
    g *= inv_l;
  }
  return {acc, abs(c[K + 1].value) * g};
}

std::string gauge_name(Gauge g) {
  switch (g) {
    case Gauge::OneOverLogN: return "ONE_OVER_LOG_N";
    case Gauge::OneOverN: return "ONE_OVER_N";
    default: return "ONE_OVER_SQRT_N_SHIFTED";
  }
}

Real AsymptoticSeries::gauge_value(const Real& n) const {
  Bits p = std::max(prec, n.precision());
  Real nn = n.with_precision(p);
  switch (gauge) {
    case Gauge::OneOverLogN: return Real(1L, p) / log(nn);
    case Gauge::OneOverN: return Real(1L, p) / nn;
    default: return Real(1L, p) / sqrt(nn + Real(0.5, p));
  }
}

Real AsymptoticSeries::evaluate(const Real& n, int order) const {
  Bits p = std::max(prec, n.precision());
  Real g = gauge_value(n);
  Real acc(p);
  Real gi = g;
  for (int i = 1; i <= order && i <= static_cast<int>(coeffs.size()); ++i) {
    acc += coeffs[i - 1] * gi;
    gi *= g;
  }
  if (sign < 0) acc = -acc;
  return acc + base.with_precision(p) + n.with_precision(p) * n_multiplier;
}

std::string AsymptoticSeries::to_json() const {
  nlohmann::json j;
  j["gauge"] = gauge_name(gauge);
  j["anchor"] = anchor;
  j["n_multiplier"] = n_multiplier;
  j["base"] = base.to_string(40);
  j["sign"] = sign;
  std::vector<std::string> cs;
  for (const auto& c : coeffs) cs.push_back(c.to_string(40));
  j["coeffs"] = cs;
  j["truncation_order"] = truncation_order;
  j["prec_bits"] = prec;
  return j.dump();
}

namespace {

// e_1..e_order with x_k = k - sum e_i h^i, h = 1/log n.
std::vector<Real> log_gauge_coefficients(int k, int order, Bits prec) {
  if (k < 1) throw DomainError("zero expansion: k must be >= 1");
  if (order < 1 || order > kMaxLogOrder) throw DomainError("zero expansion: order must be in 1..12");
  const Bits wp = prec + 32 + 4 * order;
  auto X = x_table_row(k, order, wp);
  if (X[1].is_zero()) throw SingularLeadingCoefficient("X_1^(k) vanished");
  const size_t len = static_cast<size_t>(order) + 1;
  auto F = [&](const rseries::RSeries& eps) {
    auto pw = rseries::powers(eps, order);
    rseries::RSeries out = rseries::zeros(len, wp);
    for (int j = 0; j <= order; ++j) {
      // (-1)^j j! sum_m C(m,j) X_m eps^{m-j}, shifted by h^j.
      rseries::RSeries cj = rseries::zeros(len, wp);
      for (int m = j; m <= order; ++m) {
        Real coef = X[m] * Real(binomial(m, j), wp);
        cj = rseries::add(cj, rseries::scale(pw[m - j], coef));
      }
      Real pre = factorial_real(j, wp);
      if (j % 2) pre = -pre;
      for (size_t i = 0; i + j < len; ++i) out[i + j] += cj[i] * pre;
    }
    return out;
  };
  auto eps = rseries::solve_formal(F, X[1], order, wp);
  std::vector<Real> e;
  for (int i = 1; i <= order; ++i) e.push_back(eps[i].with_precision(prec));
  return e;
}

}  // namespace

AsymptoticSeries small_zero_expansion(int k, int order, Bits prec) {
  AsymptoticSeries s;
  s.gauge = Gauge::OneOverLogN;
  s.anchor = "zero near " + std::to_string(k);
  s.n_multiplier = 0;
  s.base = R(k, prec);
  s.sign = -1;
  s.coeffs = log_gauge_coefficients(k, order, prec);
  s.truncation_order = order;
  s.prec = prec;
  return s;
}

AsymptoticSeries large_zero_expansion(int k, int order, Bits prec) {
  AsymptoticSeries s;
  s.gauge = Gauge::OneOverLogN;
  s.anchor = "zero near n - " + std::to_string(k);
  s.n_multiplier = 1;
  s.base = R(-k, prec);
  s.sign = 1;
  s.coeffs = log_gauge_coefficients(k, order, prec);
  s.truncation_order = order;
  s.prec = prec;
  return s;
}

Real tau_alpha(const Real& alpha) {
  if (!(alpha > 0L) || !(alpha < 1L)) throw DomainError("alpha must lie in (0,1)");
  return log(alpha / (1L - alpha));
}

Complex alpha_leading(long n, const Complex& z, const Real& alpha, Bits prec) {
  const Bits wp = prec + 16;
  Real a = alpha.with_precision(wp);
  Real tau = tau_alpha(a);
  Real pi = const_pi(wp);
  Complex zz = z.with_precision(wp);
  // alpha^{z-1/2} (1-alpha)^{-z-1/2}
  Complex la = Complex(log(a)) * (zz - Real(0.5, wp));
  Complex lb = Complex(log(1L - a)) * (-zz - Real(0.5, wp));
  Complex amp = exp(la + lb) * (sqrt(Real(2L, wp) / pi) / (pi * pi + tau * tau));
  Complex phase = zz + Complex(a * n);
  Complex bracket = cos_pi(phase) * pi - sin_pi(phase) * tau;
  return (amp * bracket).with_precision(prec);
}

Real alpha_zero_limit(const Real& alpha, long ell, Bits prec) {
  Real pi = const_pi(prec + 16);
  Real tau = tau_alpha(alpha.with_precision(prec + 16));
  Real arccot = ldexp(pi, -1) - atan(tau / pi);
  return (Real(ell - 1, prec + 16) + arccot / pi).with_precision(prec);
}

namespace {

// Coefficients in y = x^2 of (1 + h(y))^{-k-1/2}, where
// (8/y) log cosh(x/2) = 1 + h(y); length len.
std::vector<Rational> omega_rational(int k, int len) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, len);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  // cosh(x/2) = sum y^m / (4^m (2m)!)
  series::QSeries c(static_cast<size_t>(len) + 1);
  for (int m = 0; m <= len; ++m) {
    mpz_class d = factorial(2 * m);
    d <<= 2 * m;
    c[m] = Rational(1) / Rational(d);
  }
  auto lc = series::log(c);
  series::QSeries oneh(static_cast<size_t>(len));
  for (int m = 0; m < len; ++m) oneh[m] = lc[m + 1] * 8;
  auto r = series::power(oneh, Rational(-(2 * k + 1), 2));
  cache.emplace(key, r);
  return r;
}

}  // namespace

Real omega_coeff(int k, int j, Bits prec) {
  if (k < 0 || j < 0) throw DomainError("omega_coeff: need k, j >= 0");
  const Bits wp = prec + 32;
  auto r = omega_rational(k, j + 1);
  Real pi2 = pow(const_pi(wp), 2);
  // 1/(pi^2 + y) = sum_i (-1)^i y^i / pi^{2i+2}
  Real acc(wp);
  Real inv = Real(1L, wp) / pi2;
  for (int i = 0; i <= j; ++i) {
    Real t = Rq(r[j - i], wp) * inv;
    if (i % 2) acc -= t;
    else acc += t;
    inv /= pi2;
  }
  // (2j)! 8^k 2 sqrt 2
  Real pre = factorial_real(2 * j, wp) * pow(Real(8L, wp), static_cast<long>(k)) * ldexp(sqrt(Real(2L, wp)), 1);
  return (acc * pre).with_precision(prec);
}

std::vector<Real> p_poly(int k, Bits prec) {
  std::vector<Real> c(static_cast<size_t>(2 * k) + 1, Real(prec));
  for (int j = 0; j <= k; ++j) c[2 * k - 2 * j] = omega_coeff(k, j, prec) * Real(binomial(2 * k, 2 * j), prec);
  return c;
}

std::vector<Real> q_poly(int k, Bits prec) {
  std::vector<Real> c(static_cast<size_t>(2 * k) + 2, Real(prec));
  for (int j = 0; j <= k; ++j)
    c[2 * k + 1 - 2 * j] = omega_coeff(k + 1, j, prec) * Real(binomial(2 * k + 1, 2 * j), prec);
  return c;
}

namespace {

Complex horner(const std::vector<Real>& c, const Complex& z) {
  Complex acc(z.precision());
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// 4^k k!
Real four_fact(int k, Bits p) { return ldexp(factorial_real(k, p), 2 * k); }

}  // namespace

Complex middle_expansion_eval(long n, const Complex& z, int K, Bits prec) {
  if (n < 2 || K < 0) throw DomainError("middle_expansion_eval: need n >= 2, K >= 0");
  const Bits wp = prec + 16;
  Complex zz = z.with_precision(wp);
  Real inv_n = Real(1L, wp) / Real(n, wp);
  Complex P(wp), Q(wp);
  Real t = Real(1L, wp);
  for (int k = 0; k <= K; ++k) {
    Real d = four_fact(k, wp);
    P += horner(p_poly(k, wp), zz) * (t / d);
    Q += horner(q_poly(k, wp), zz) * (t * inv_n / ldexp(d, 1));
    t *= inv_n;
  }
  auto [cs, sn] = shifted_cos_sin(zz, n);
  Real sqrt_pi = sqrt(const_pi(wp));
  return (cs * P * sqrt_pi - sn * Q / sqrt_pi).with_precision(prec);
}

AsymptoticSeries middle_zero_expansion(int k, Parity parity, int order, Bits prec) {
  if (order < 1 || order > kMaxInverseOrder) throw DomainError("middle_zero_expansion: order must be in 1..6");
  const Bits wp = prec + 32 + 8 * order;
  const size_t len = static_cast<size_t>(order) + 1;
  const bool odd = parity == Parity::Odd;
  // Offset from degree/2: k - 1/2 (even) or k (odd).
  Real a = odd ? R(k, wp) : R(k, wp) - Real(0.5, wp);
  // t = 1/degree as a series in h = 1/n: h/2 or h/(2+h).
  rseries::RSeries t = rseries::zeros(len, wp);
  for (size_t i = 1; i < len; ++i) {
    Real v = ldexp(R(1, wp), -static_cast<long>(odd ? i : 1));
    if (odd && (i % 2 == 0)) v = -v;
    if (odd || i == 1) t[i] = v;
  }
  std::vector<std::vector<Real>> ps, qs;
  for (int j = 0; j <= order; ++j) {
    ps.push_back(p_poly(j, wp));
    qs.push_back(q_poly(j, wp));
  }
  auto tpow = rseries::powers(t, order + 1);
  const Real pi = const_pi(wp);
  auto F = [&](const rseries::RSeries& delta) {
    rseries::RSeries zser = delta;
    zser[0] = a;
    rseries::RSeries P = rseries::zeros(len, wp), Q = rseries::zeros(len, wp);
    for (int j = 0; j <= order; ++j) {
      Real d = four_fact(j, wp);
      P = rseries::add(P, rseries::scale(rseries::mul(rseries::compose_poly(ps[j], zser), tpow[j]), Real(1L, wp) / d));
      Q = rseries::add(Q, rseries::scale(rseries::mul(rseries::compose_poly(qs[j], zser), tpow[j + 1]),
                                         Real(1L, wp) / ldexp(d, 1)));
    }
    auto sn = rseries::sin_of(delta, pi);
    auto cs = rseries::cos_of(delta, pi);
    return rseries::add(rseries::scale(rseries::mul(sn, P), pi), rseries::mul(cs, Q));
  };
  Real D = ldexp(sqrt(R(2, wp)), 1);
  auto delta = rseries::solve_formal(F, D, order, wp);

  AsymptoticSeries s;
  s.gauge = Gauge::OneOverN;
  s.anchor = odd ? "middle zero, odd degree 2n+1, index n+" + std::to_string(k + 1)
                 : "middle zero, even degree 2n, index n+" + std::to_string(k);
  s.n_multiplier = 1;
  s.base = odd ? (a + Real(0.5, wp)).with_precision(prec) : a.with_precision(prec);
  s.sign = 1;
  for (int i = 1; i <= order; ++i) s.coeffs.push_back(delta[i].with_precision(prec));
  s.truncation_order = order;
  s.prec = prec;
  return s;
}

AsymptoticSeries dnumber_expansion(int terms, Bits prec) {
  if (terms < 1 || terms > kMaxInverseOrder + 1) throw DomainError("dnumber_expansion: terms must be in 1..7");
  const Bits wp = prec + 16;
  Real sqrt_pi = sqrt(const_pi(wp));
  std::vector<Real> a;
  for (int k = 0; k < terms; ++k) {
    Real d = factorial_real(k, wp) * pow(Real(8L, wp), static_cast<long>(k));
    a.push_back((sqrt_pi * omega_coeff(k, k, wp) / d).with_precision(prec));
  }
  AsymptoticSeries s;
  s.gauge = Gauge::OneOverN;
  s.anchor = "(-1)^n sqrt(2n) D_2n/(2n)!";
  s.base = a[0];
  s.coeffs.assign(a.begin() + 1, a.end());
  s.truncation_order = terms - 1;
  s.prec = prec;
  return s;
}

AsymptoticSeries gauss_encke_expansion(int terms, Bits prec) {
  if (terms < 1 || terms > kMaxInverseOrder + 1) throw DomainError("gauss_encke_expansion: terms must be in 1..7");
  const Bits wp = prec + 16;
  Real pre = pow(const_pi(wp), 2) / (sqrt(R(2, wp)) * 16L);
  std::vector<Real> a;
  for (int k = 0; k < terms; ++k) {
    Real sum(wp);
    for (int j = 0; j <= k; ++j)
      sum += Real(binomial(2 * k + 1, 2 * j), wp) * ldexp(omega_coeff(k + 1, j, wp), 2 * j);
    Real d = factorial_real(k, wp) * pow(Real(32L, wp), static_cast<long>(k));
    a.push_back((pre * sum / d).with_precision(prec));
  }
  AsymptoticSeries s;
  s.gauge = Gauge::OneOverN;
  s.anchor = "K_2n (-1)^(n+1) 2^(2n-1) pi^(5/2) n^(3/2)";
  s.base = a[0];
  s.coeffs.assign(a.begin() + 1, a.end());
  s.truncation_order = terms - 1;
  s.prec = prec;
  return s;
}

namespace {

void require_off_interval(const Complex& z, double dist) {
  double x = z.re().to_double(), y = z.im().to_double();
  double dx = x < 0 ? -x : (x > 1 ? x - 1 : 0.0);
  if (std::hypot(dx, y) <= dist) throw DomainError("z must lie off the segment [0,1]");
}

}  // namespace

Complex saddle_point(const Complex& z) { return Complex(Real(1L, z.precision())) / (z - 1L); }

Complex saddle_phase(const Complex& xi, const Complex& z) { return log(xi) - z * log(xi + 1L); }

Complex saddle_amplitude(const Complex& xi) {
  Complex one_xi = xi + 1L;
  return Complex(Real(1L, xi.precision())) / (one_xi * log(one_xi));
}

Complex nonosc_leading(long n, const Complex& z, Bits prec) {
  require_off_interval(z, 1e-6);
  const Bits wp = prec + 32 + static_cast<Bits>(std::log2(static_cast<double>(n) + 2));
  Complex zz = z.with_precision(wp);
  Complex zm1 = zz - 1L;
  Complex lq = log(zz / zm1);
  Real nn(n, wp);
  Complex expo = log(zm1) * nn + (zz * nn + Real(0.5, wp)) * lq - log(zz * lq) -
                 Complex(ldexp(log(ldexp(const_pi(wp), 1) * nn), -1));
  return exp(expo).with_precision(prec);
}

Complex cauchy_transform_limit(const Complex& z) {
  if (z.im().is_zero() && z.re() >= 0L && z.re() <= 1L) throw DomainError("z must lie off the segment [0,1]");
  return log(z / (z - 1L));
}

}  // namespace bk2
