#include "bk2/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <fstream>
#include <random>
#include <sstream>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"

namespace bk2 {

namespace {

// Exact sign of an integer-coefficient polynomial at dyadic points a / 2^m.
class DyadicSigner {
 public:
  explicit DyadicSigner(std::vector<mpz_class> c) : c_(std::move(c)) {}

  int sign_at(const mpz_class& a, long m) const {
    const long n = static_cast<long>(c_.size()) - 1;
    mpz_class acc = c_.back();
    for (long i = n - 1; i >= 0; --i) {
      acc *= a;
      mpz_class t = c_[static_cast<size_t>(i)];
      mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), static_cast<mp_bitcnt_t>(m * (n - i)));
      acc += t;
    }
    return sgn(acc);
  }

  const std::vector<mpz_class>& coeffs() const { return c_; }

 private:
  std::vector<mpz_class> c_;
};

struct Dyadic {
  mpz_class a;
  long m;
  Rational value() const {
    Rational q(a);
    mpz_class d = 1;
    mpz_mul_2exp(d.get_mpz_t(), d.get_mpz_t(), static_cast<mp_bitcnt_t>(m));
    return q / Rational(d);
  }
};

// Real Horner of p and p' with coefficient magnitudes summed for error scale.
struct PolyEval {
  Real p, dp, scale, dscale;
};

PolyEval eval_with_scale(const std::vector<Real>& c, const Real& x) {
  const Bits wp = x.precision();
  Real p(wp), dp(wp), s(64), ds(64);
  Real ax = abs(x).with_precision(64);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * x + p;
    p = p * x + *it;
    ds = ds * ax + s;
    s = s * ax + abs(*it).with_precision(64);
  }
  return {p, dp, s, ds};
}

std::vector<Real> to_reals(const std::vector<mpz_class>& c, Bits wp) {
  std::vector<Real> out;
  out.reserve(c.size());
  for (const auto& v : c) out.emplace_back(v, wp);
  return out;
}

constexpr long kBisectBits = 32;

// Refines a zero in the dyadic bracket (lo, hi) where the signs differ.
CertifiedZero refine_exact(const DyadicSigner& sg, long k, Dyadic lo, Dyadic hi, Bits prec) {
  int slo = sg.sign_at(lo.a, lo.m);
  int shi = sg.sign_at(hi.a, hi.m);
  if (slo == 0 || shi == 0 || slo == shi) throw BracketFailure("no sign change on the half-interval bracket");
  // Bring both ends to a common scale, then halve to width 2^-kBisectBits.
  long m = std::max(lo.m, hi.m);
  lo.a <<= static_cast<mp_bitcnt_t>(m - lo.m);
  hi.a <<= static_cast<mp_bitcnt_t>(m - hi.m);
  lo.m = hi.m = m;
  while (m < kBisectBits) {
    ++m;
    lo.a <<= 1;
    hi.a <<= 1;
    lo.m = hi.m = m;
    mpz_class mid = (lo.a + hi.a) / 2;
    int s = sg.sign_at(mid, m);
    if (s == 0) {
      CertifiedZero z{k, Dyadic{mid, m}.value(), Dyadic{mid, m}.value(), Real(Dyadic{mid, m}.value(), prec), Real(64)};
      return z;
    }
    if (s == slo) lo.a = mid;
    else hi.a = mid;
  }

  // Newton polish at a precision covering the cancellation in Horner.
  Real x = (Real(lo.value(), prec + 64) + Real(hi.value(), prec + 64)) / 2L;
  Bits wp = prec + 64;
  for (int tries = 0; tries < 4; ++tries) {
    auto c = to_reals(sg.coeffs(), wp);
    auto e = eval_with_scale(c, x.with_precision(wp));
    long loss = e.dscale.exponent() - (e.dp.is_zero() ? e.dscale.exponent() - static_cast<long>(wp) : e.dp.exponent());
    Bits need = prec + kGuardBits + std::max(0L, loss);
    if (need <= wp) break;
    wp = need;
  }
  x = x.with_precision(wp);
  auto c = to_reals(sg.coeffs(), wp);
  Real flo(lo.value(), wp), fhi(hi.value(), wp);
  for (int it = 0; it < 60; ++it) {
    auto e = eval_with_scale(c, x);
    if (e.dp.is_zero()) break;
    Real step = e.p / e.dp;
    Real nx = x - step;
    if (!(nx > flo && nx < fhi)) nx = (flo + fhi) / 2L;
    // Track the bracket from the sign of p.
    if ((e.p.sign() > 0) == (slo > 0)) flo = max(flo, x);
    else if (!e.p.is_zero()) fhi = min(fhi, x);
    bool done = abs(step) <= ldexp(max(abs(x), Real(1L, 64)), -static_cast<long>(prec) - 8);
    x = std::move(nx);
    if (done) break;
  }

  // Certify with exact signs at dyadic points on either side.
  const long mcert = static_cast<long>(prec) + 24;
  mpz_class center;
  {
    Real scaled = ldexp(x, mcert);
    Rational q = round(scaled).to_rational();
    center = q.get_num();
  }
  long mag = std::max(0L, abs(x).exponent());
  for (long rbits : {static_cast<long>(prec) - 8 - mag, static_cast<long>(prec) / 2}) {
    long shift = mcert - rbits;
    if (shift < 0) continue;
    mpz_class r = 1;
    r <<= static_cast<mp_bitcnt_t>(shift);
    Dyadic a{center - r, mcert}, b{center + r, mcert};
    int sa = sg.sign_at(a.a, a.m), sb = sg.sign_at(b.a, b.m);
    if (sa == slo && sb == shi) {
      return {k, a.value(), b.value(), Real(Dyadic{center, mcert}.value(), prec), ldexp(Real(1L, 64), -rbits)};
    }
  }
  throw BracketFailure("Newton polish could not be certified");
}

}  // namespace

ZeroSet real_zeros_exact(int n, Bits prec) {
  if (n < 0) throw DomainError("real_zeros_exact: n must be >= 0");
  ZeroSet out;
  out.n = n;
  if (n == 0) return out;
  auto poly = build_diagonal(n);
  DyadicSigner sg(poly.integer_coeffs());
  const int half = n / 2;
  std::vector<CertifiedZero> lower;
  for (int k = 1; k <= half; ++k)
    lower.push_back(refine_exact(sg, k, Dyadic{mpz_class(2 * k - 1), 1}, Dyadic{mpz_class(k), 0}, prec));
  out.zeros = lower;
  if (n % 2) {
    if (sg.sign_at(mpz_class(n), 1) != 0) throw BracketFailure("odd degree: n/2 is not a zero");
    Rational mid(n, 2);
    out.zeros.push_back({half + 1, mid, mid, Real(mid, prec), Real(64)});
  }
  // x_{n-k+1} = n - x_k exactly.
  for (auto it = lower.rbegin(); it != lower.rend(); ++it) {
    CertifiedZero z;
    z.k = n - it->k + 1;
    z.lo = Rational(n) - it->hi;
    z.hi = Rational(n) - it->lo;
    z.value = Real(n, prec) - it->value;
    z.error_radius = it->error_radius;
    out.zeros.push_back(std::move(z));
  }
  return out;
}

namespace {

// S_n(x) for real 0 < x < n, through the centered form near n/2.
PrecisionValue scaled_value(long n, const Real& x, Bits prec) {
  Real w = x - Real(n, x.precision()) / 2L;
  if (4 * std::abs(w.to_double()) < static_cast<double>(n)) {
    auto m = eval_middle(n, Complex(w), prec);
    Real pi = const_pi(m.value.precision());
    return {m.value.re() / pi, m.error_bound / pi.with_precision(64), m.precision_bits, m.near_zero};
  }
  auto v = eval_integral_rep(n, Complex(x), prec);
  return {v.value.value.re(), v.value.error_bound, v.value.precision_bits, v.value.near_zero};
}

int certified_sign(const PrecisionValue& v) {
  if (abs(v.value) <= v.error_bound) return 0;
  return v.value.sign();
}

}  // namespace

CertifiedZero real_zero_large_n(long n, long k, Bits prec) {
  if (n < 1 || k < 1 || k > n) throw DomainError("real_zero_large_n: need 1 <= k <= n");
  if (n % 2 && 2 * k == n + 1) {
    Rational mid(n, 2);
    return {k, mid, mid, Real(mid, prec), Real(64)};
  }
  if (2 * k > n + 1) {
    CertifiedZero z = real_zero_large_n(n, n - k + 1, prec);
    return {k, Rational(n) - z.hi, Rational(n) - z.lo, Real(n, prec) - z.value, z.error_radius};
  }
  const Bits wp = prec + 16;
  Real lo(Rational(2 * k - 1, 2), wp), hi(k, wp);
  const int slo = certified_sign(scaled_value(n, lo, prec));
  const int shi = certified_sign(scaled_value(n, hi, prec));
  // S_n vanishes at no integer, so hi only fails to certify through a bug.
  if (slo == 0 || shi == 0 || slo == shi) throw BracketFailure("large-n bracket signs do not differ");
  Real x = (lo + hi) / 2L;
  for (int it = 0; it < 100; ++it) {
    auto f = scaled_value(n, x, prec);
    int s = certified_sign(f);
    if (s == slo) lo = x;
    else if (s == shi) hi = x;
    Real d = scaled_derivative(n, x.with_precision(wp));
    Real nx = d.is_zero() ? (lo + hi) / 2L : x - f.value.with_precision(wp) / d;
    if (!(nx > lo && nx < hi)) nx = (lo + hi) / 2L;
    Real step = abs(nx - x);
    x = std::move(nx);
    if (s == 0 || step <= ldexp(max(abs(x), Real(1L, 64)), -static_cast<long>(prec) + 4)) break;
  }
  long mag = std::max(0L, abs(x).exponent());
  for (long rbits : {static_cast<long>(prec) - 24 - mag, static_cast<long>(prec) / 2, static_cast<long>(prec) / 4}) {
    Real r = ldexp(Real(1L, wp), -rbits);
    Real a = x - r, b = x + r;
    if (certified_sign(scaled_value(n, a, prec)) == slo && certified_sign(scaled_value(n, b, prec)) == shi)
      return {k, a.to_rational(), b.to_rational(), x.with_precision(prec), r.with_precision(64)};
  }
  throw PrecisionExhausted("large-n zero could not be certified");
}

namespace {

// In-place complex Horner for p and p' on raw MPFR values.
class ComplexHorner {
 public:
  ComplexHorner(const ExactPolynomial& p, Bits wp) : wp_(wp) {
    for (const auto& q : p.coeffs()) c_.emplace_back(q, wp);
    for (auto* t : {&vr_, &vi_, &dr_, &di_, &t1_, &t2_}) *t = Real(wp);
  }

  // Returns p(x) / p'(x); false when p'(x) = 0.
  bool newton_ratio(const Real& xr, const Real& xi, Complex& ratio, bool& exact_root) {
    mpfr_set_zero(vr_.get(), 1);
    mpfr_set_zero(vi_.get(), 1);
    mpfr_set_zero(dr_.get(), 1);
    mpfr_set_zero(di_.get(), 1);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      // d = d x + v
      mpfr_fmms(t1_.get(), dr_.get(), xr.get(), di_.get(), xi.get(), MPFR_RNDN);
      mpfr_fmma(t2_.get(), dr_.get(), xi.get(), di_.get(), xr.get(), MPFR_RNDN);
      mpfr_add(dr_.get(), t1_.get(), vr_.get(), MPFR_RNDN);
      mpfr_add(di_.get(), t2_.get(), vi_.get(), MPFR_RNDN);
      // v = v x + c
      mpfr_fmms(t1_.get(), vr_.get(), xr.get(), vi_.get(), xi.get(), MPFR_RNDN);
      mpfr_fmma(t2_.get(), vr_.get(), xi.get(), vi_.get(), xr.get(), MPFR_RNDN);
      mpfr_add(vr_.get(), t1_.get(), it->get(), MPFR_RNDN);
      mpfr_set(vi_.get(), t2_.get(), MPFR_RNDN);
    }
    exact_root = vr_.is_zero() && vi_.is_zero();
    if (dr_.is_zero() && di_.is_zero()) return false;
    ratio = Complex(vr_, vi_) / Complex(dr_, di_);
    return true;
  }

  Bits precision() const { return wp_; }

 private:
  Bits wp_;
  std::vector<Real> c_;
  Real vr_, vi_, dr_, di_, t1_, t2_;
};

using LDComplex = std::complex<long double>;

LDComplex to_ld(const Complex& z) {
  return {static_cast<long double>(mpfr_get_ld(z.re().get(), MPFR_RNDN)),
          static_cast<long double>(mpfr_get_ld(z.im().get(), MPFR_RNDN))};
}

constexpr int kMaxAberthIterations = 1000;

}  // namespace

std::vector<PrecisionComplex> complex_zeros(const ExactPolynomial& p, Bits prec, std::uint64_t seed) {
  const int n = p.degree();
  if (n < 1) return {};
  if (n > kMaxExactDegree) throw DomainError("complex_zeros: degree above 512");
  // Horner on these polynomials loses about 3 bits per degree near the roots.
  Bits wp = prec + 64 + 3 * static_cast<Bits>(n);
  std::vector<Complex> z;
  for (int round = 0; round < 3; ++round, wp = 2 * wp) {
    ComplexHorner horner(p, wp);
    if (z.empty()) {
      // Circle around the centroid with radius the geometric mean distance
      // |p(centroid)/lead|^(1/n) of the roots from it.
      Rational centroid = -p.coeff(n - 1) / (p.leading() * n);
      Rational pc = p(centroid) / p.leading();
      double radius = 1.0;
      if (pc != 0) radius = std::exp2(log2(abs(Real(pc, 64))).to_double() / n);
      radius = std::max(radius, 1e-6);
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> jitter(-0.25, 0.25);
      Real cr(centroid, wp);
      for (int j = 0; j < n; ++j) {
        double th = 2 * M_PI * (j + 0.5 + jitter(rng)) / n;
        z.emplace_back(cr + Real(radius * std::cos(th), wp), Real(radius * std::sin(th), wp));
      }
    } else {
      for (auto& v : z) v = v.with_precision(wp);
    }
    std::vector<bool> done(static_cast<size_t>(n), false);
    std::vector<LDComplex> zl(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) zl[i] = to_ld(z[i]);
    const long tol_exp = -static_cast<long>(prec) - 8;
    int it = 0;
    for (; it < kMaxAberthIterations; ++it) {
      bool all = true;
      for (int i = 0; i < n; ++i) {
        if (done[i]) continue;
        Complex ratio(wp);
        bool exact = false;
        if (!horner.newton_ratio(z[i].re(), z[i].im(), ratio, exact) || exact) {
          done[i] = exact;
          all = all && exact;
          continue;
        }
        // The pair sum only perturbs the step at second order, so long
        // double suffices for it.
        LDComplex sum = 0;
        for (int j = 0; j < n; ++j)
          if (j != i) sum += 1.0L / (zl[i] - zl[j]);
        LDComplex w = 1.0L - to_ld(ratio) * sum;
        Complex wc(Real(static_cast<double>(w.real()), 64), Real(static_cast<double>(w.imag()), 64));
        Complex step = ratio / wc;
        z[i] -= step;
        zl[i] = to_ld(z[i]);
        Real size = max(abs(z[i]), Real(1L, 64));
        if (abs(step) <= ldexp(size, tol_exp)) done[i] = true;
        else all = false;
      }
      if (all) break;
    }
    if (it == kMaxAberthIterations) continue;
    // Re-validate: one Newton step at wp + 64 must stay below the target.
    ComplexHorner check(p, wp + 64);
    std::vector<PrecisionComplex> out;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      Complex x = z[i].with_precision(wp + 64), ratio(wp + 64);
      bool exact = false;
      Real step(64);
      if (check.newton_ratio(x.re(), x.im(), ratio, exact) && !exact) step = abs(ratio).with_precision(64);
      Real size = max(abs(x), Real(1L, 64)).with_precision(64);
      if (step > ldexp(size, -static_cast<long>(prec) + 8)) ok = false;
      out.push_back({z[i].with_precision(prec), step * 2L + ldexp(size, -static_cast<long>(prec)), wp, false});
    }
    if (ok) return out;
  }
  throw NonConvergence("Aberth-Ehrlich iteration did not converge");
}

ExactPolynomial attractor_polynomial(int n, const Rational& lambda) {
  Rational a = Rational(1) - lambda + lambda * n;
  return build_generalized(n, a).scale(Rational(n));
}

Complex MeasureSample::cauchy_transform(const Complex& z) const {
  Complex acc(z.precision());
  for (const auto& u : points) acc += Complex(Real(1L, z.precision())) / (z - u);
  return acc / Real(static_cast<long>(points.size()), z.precision());
}

MeasureSample measure_stats(const ZeroSet& zs) {
  MeasureSample m;
  m.n = zs.n;
  if (zs.zeros.empty()) return m;
  const Bits p = zs.zeros.front().value.precision();
  std::vector<Real> pts;
  for (const auto& z : zs.zeros) pts.push_back(z.value / Real(zs.n, p));
  std::sort(pts.begin(), pts.end(), [](const Real& a, const Real& b) { return a < b; });
  Real ks(p);
  const long n = static_cast<long>(pts.size());
  for (long i = 0; i < n; ++i) {
    Real above = Real(i + 1, p) / n - pts[i];
    Real below = pts[i] - Real(i, p) / n;
    ks = max(ks, max(above, below));
  }
  m.points = std::move(pts);
  m.ks_distance = ks.with_precision(64);
  return m;
}

namespace {

// Decimal string rounded toward -inf (dir < 0), +inf (dir > 0) or nearest.
std::string decimal(const Real& x, int dir, int digits = 30) {
  char* buf = nullptr;
  const char* fmt = dir < 0 ? "%.*RDe" : (dir > 0 ? "%.*RUe" : "%.*RNe");
  mpfr_asprintf(&buf, fmt, digits - 1, x.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string csv_rational(const Rational& q, int dir) {
  if (q.get_den() == 1 || q.get_den() == 2) return format_rational(q);
  return decimal(Real(q, 256), dir);
}

}  // namespace

void write_zeros_csv(const std::string& path, const std::vector<ZeroSet>& sets) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  f << "n,k,lo,hi,value,err\n";
  for (const auto& s : sets)
    for (const auto& z : s.zeros)
      f << s.n << ',' << z.k << ',' << csv_rational(z.lo, -1) << ',' << csv_rational(z.hi, +1) << ','
        << decimal(z.value, 0) << ',' << decimal(z.error_radius, +1, 6) << '\n';
}

std::vector<ZeroSet> read_zeros_csv(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  std::string line;
  std::getline(f, line);
  std::vector<ZeroSet> out;
  auto to_rational = [](const std::string& s) {
    if (s.find_first_of(".eE") == std::string::npos) return parse_rational(s);
    return Real(s, 256).to_rational();
  };
  while (std::getline(f, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string cell;
    std::vector<std::string> cells;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 6) throw DomainError("malformed zeros.csv row: " + line);
    long n = std::stol(cells[0]);
    if (out.empty() || out.back().n != n) out.push_back({n, {}});
    CertifiedZero z;
    z.k = std::stol(cells[1]);
    z.lo = to_rational(cells[2]);
    z.hi = to_rational(cells[3]);
    z.value = Real(cells[4], 128);
    z.error_radius = Real(cells[5], 64);
    out.back().zeros.push_back(std::move(z));
  }
  return out;
}

void write_attractor_csv(const std::string& path, const std::vector<AttractorCloud>& clouds) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  f << "lambda,n,re,im\n";
  for (const auto& c : clouds)
    for (const auto& r : c.roots)
      f << format_rational(c.lambda) << ',' << c.n << ',' << decimal(r.value.re(), 0) << ','
        << decimal(r.value.im(), 0) << '\n';
}

}  // namespace bk2
