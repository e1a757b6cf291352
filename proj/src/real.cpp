#include "bk2/real.hpp"

#include <climits>
#include <stdexcept>
#include <string>

namespace bk2 {

namespace {

Bits widest(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

template <typename F>
Real unary(const Real& x, F f) {
  Real r(x.precision());
  f(r.get(), x.get(), MPFR_RNDN);
  return r;
}

// Reduces x to r = x - 2*floor(x/2) in [0, 2). Exact: r only keeps low-order
// bits of x.
Real reduce_mod2(const Real& x) {
  Real half = ldexp(x, -1);
  Real fl(x.precision());
  mpfr_floor(fl.get(), half.get());
  Real r(x.precision());
  mpfr_sub(r.get(), x.get(), ldexp(fl, 1).get(), MPFR_RNDN);
  return r;
}

}  // namespace

Real::Real(std::string_view text, Bits prec) {
  mpfr_init2(v_, prec);
  std::string s(text);
  if (mpfr_set_str(v_, s.c_str(), 10, MPFR_RNDN) != 0) {
    mpfr_clear(v_);
    throw std::invalid_argument("not a decimal number: " + s);
  }
}

long Real::exponent() const {
  if (mpfr_zero_p(v_)) return LONG_MIN / 4;
  if (!mpfr_number_p(v_)) return LONG_MAX / 4;
  return mpfr_get_exp(v_);
}

mpq_class Real::to_rational() const {
  if (!mpfr_number_p(v_)) throw std::domain_error("non-finite value has no rational form");
  mpz_class m;
  mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), v_);
  mpq_class q(m);
  if (e >= 0) {
    mpz_class s;
    mpz_mul_2exp(s.get_mpz_t(), m.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
    q = mpq_class(s);
  } else {
    mpz_class d;
    mpz_ui_pow_ui(d.get_mpz_t(), 2, static_cast<unsigned long>(-e));
    q = mpq_class(m, d);
    q.canonicalize();
  }
  return q;
}

std::string Real::to_string(int digits) const {
  if (mpfr_nan_p(v_)) return "nan";
  if (mpfr_inf_p(v_)) return mpfr_sgn(v_) > 0 ? "inf" : "-inf";
  if (mpfr_zero_p(v_)) return "0";
  mpfr_exp_t e = 0;
  char* raw = mpfr_get_str(nullptr, &e, 10, static_cast<size_t>(digits), v_, MPFR_RNDN);
  std::string m(raw);
  mpfr_free_str(raw);
  std::string sign;
  if (m[0] == '-') {
    sign = "-";
    m.erase(0, 1);
  }
  std::string out = sign + m.substr(0, 1);
  std::string frac = m.substr(1);
  while (!frac.empty() && frac.back() == '0') frac.pop_back();
  if (!frac.empty()) out += "." + frac;
  long exp10 = static_cast<long>(e) - 1;
  if (exp10 != 0) out += "e" + std::to_string(exp10);
  return out;
}

Real& Real::operator+=(const Real& o) {
  Bits p = widest(*this, o);
  if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_add(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator-=(const Real& o) {
  Bits p = widest(*this, o);
  if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator*=(const Real& o) {
  Bits p = widest(*this, o);
  if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}
Real& Real::operator/=(const Real& o) {
  Bits p = widest(*this, o);
  if (p != precision()) mpfr_prec_round(v_, p, MPFR_RNDN);
  mpfr_div(v_, v_, o.v_, MPFR_RNDN);
  return *this;
}

Real ldexp(const Real& x, long e) {
  Real r(x);
  mpfr_mul_2si(r.get(), r.get(), e, MPFR_RNDN);
  return r;
}
Real abs(const Real& x) { return unary(x, mpfr_abs); }
Real sqrt(const Real& x) { return unary(x, mpfr_sqrt); }
Real exp(const Real& x) { return unary(x, mpfr_exp); }
Real expm1(const Real& x) { return unary(x, mpfr_expm1); }
Real log(const Real& x) { return unary(x, mpfr_log); }
Real log1p(const Real& x) { return unary(x, mpfr_log1p); }
Real log2(const Real& x) { return unary(x, mpfr_log2); }
Real sin(const Real& x) { return unary(x, mpfr_sin); }
Real cos(const Real& x) { return unary(x, mpfr_cos); }
Real tan(const Real& x) { return unary(x, mpfr_tan); }
Real atan(const Real& x) { return unary(x, mpfr_atan); }
Real sinh(const Real& x) { return unary(x, mpfr_sinh); }
Real cosh(const Real& x) { return unary(x, mpfr_cosh); }
Real tanh(const Real& x) { return unary(x, mpfr_tanh); }
Real atanh(const Real& x) { return unary(x, mpfr_atanh); }
Real gamma(const Real& x) { return unary(x, mpfr_gamma); }
Real digamma(const Real& x) { return unary(x, mpfr_digamma); }

Real atan2(const Real& y, const Real& x) {
  Real r(widest(x, y));
  mpfr_atan2(r.get(), y.get(), x.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, const Real& y) {
  Real r(widest(x, y));
  mpfr_pow(r.get(), x.get(), y.get(), MPFR_RNDN);
  return r;
}

Real pow(const Real& x, long k) {
  Real r(x.precision());
  mpfr_pow_si(r.get(), x.get(), k, MPFR_RNDN);
  return r;
}

Real floor(const Real& x) {
  Real r(x.precision());
  mpfr_floor(r.get(), x.get());
  return r;
}

Real round(const Real& x) {
  Real r(x.precision());
  mpfr_round(r.get(), x.get());
  return r;
}

Real min(const Real& a, const Real& b) { return (a <= b) ? a : b; }
Real max(const Real& a, const Real& b) { return (a >= b) ? a : b; }

std::pair<Real, int> lgamma(const Real& x) {
  Real r(x.precision());
  int s = 0;
  mpfr_lgamma(r.get(), &s, x.get(), MPFR_RNDN);
  return {r, s};
}

Real cos_pi(const Real& x) {
  Real r = reduce_mod2(x);
  // r in [0,2); exact values at multiples of 1/2.
  Real twice = ldexp(r, 1);
  if (mpfr_integer_p(twice.get())) {
    long q = twice.to_long();
    static constexpr int table[4] = {1, 0, -1, 0};
    return Real(static_cast<long>(table[q & 3]), x.precision());
  }
  Bits p = x.precision() + 8;
  Real arg = const_pi(p) * r.with_precision(p);
  return cos(arg).with_precision(x.precision());
}

Real sin_pi(const Real& x) {
  Real r = reduce_mod2(x);
  Real twice = ldexp(r, 1);
  if (mpfr_integer_p(twice.get())) {
    long q = twice.to_long();
    static constexpr int table[4] = {0, 1, 0, -1};
    return Real(static_cast<long>(table[q & 3]), x.precision());
  }
  Bits p = x.precision() + 8;
  Real arg = const_pi(p) * r.with_precision(p);
  return sin(arg).with_precision(x.precision());
}

Real softplus(const Real& x) {
  if (x.sign() > 0) return x + log1p(exp(-x));
  return log1p(exp(x));
}

Real const_pi(Bits prec) {
  Real r(prec);
  mpfr_const_pi(r.get(), MPFR_RNDN);
  return r;
}

Real const_euler(Bits prec) {
  Real r(prec);
  mpfr_const_euler(r.get(), MPFR_RNDN);
  return r;
}

Real const_log2(Bits prec) {
  Real r(prec);
  mpfr_const_log2(r.get(), MPFR_RNDN);
  return r;
}

Real zeta(unsigned long j, Bits prec) {
  Real r(prec);
  mpfr_zeta_ui(r.get(), j, MPFR_RNDN);
  return r;
}

Complex& Complex::operator*=(const Complex& o) {
  Real a = re_ * o.re_ - im_ * o.im_;
  Real b = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(a);
  im_ = std::move(b);
  return *this;
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    im_ /= o.re_;
    return *this;
  }
  Real d = o.re_ * o.re_ + o.im_ * o.im_;
  Real a = (re_ * o.re_ + im_ * o.im_) / d;
  Real b = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(a);
  im_ = std::move(b);
  return *this;
}

std::string Complex::to_string(int digits) const {
  std::string s = re_.to_string(digits);
  if (im_.is_zero()) return s;
  std::string i = im_.to_string(digits);
  if (i[0] == '-') return s + " - " + i.substr(1) + "i";
  return s + " + " + i + "i";
}

Complex conj(const Complex& z) { return {z.re(), -z.im()}; }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.get(), z.re().get(), z.im().get(), MPFR_RNDN);
  return r;
}

Real norm(const Complex& z) { return z.re() * z.re() + z.im() * z.im(); }

Real arg(const Complex& z) { return atan2(z.im(), z.re()); }

Complex exp(const Complex& z) {
  Real m = exp(z.re());
  if (z.im().is_zero()) return Complex(m, Real(z.precision()));
  return {m * cos(z.im()), m * sin(z.im())};
}

Complex log(const Complex& z) {
  if (z.im().is_zero() && z.re().sign() > 0) return Complex(log(z.re()), Real(z.precision()));
  return {log(abs(z)), arg(z)};
}

Complex sqrt(const Complex& z) {
  if (z.is_zero()) return z;
  Real r = abs(z);
  Real a = sqrt(ldexp(r + abs(z.re()), -1));
  if (z.re().sign() >= 0) return {a, z.im() / ldexp(a, 1)};
  Real b = z.im().sign() < 0 ? -a : a;
  return {abs(z.im()) / ldexp(a, 1), b};
}

Complex pow(const Complex& z, long k) {
  if (k < 0) return Complex(Real(1L, z.precision())) / pow(z, -k);
  Complex result(Real(1L, z.precision()));
  Complex base = z;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k) base *= base;
  }
  return result;
}

Complex pow(const Complex& z, const Complex& w) {
  if (z.is_zero()) return Complex(z.precision());
  return exp(w * log(z));
}

Complex sin(const Complex& z) {
  return {sin(z.re()) * cosh(z.im()), cos(z.re()) * sinh(z.im())};
}

Complex cos(const Complex& z) {
  return {cos(z.re()) * cosh(z.im()), -(sin(z.re()) * sinh(z.im()))};
}

Complex cos_pi(const Complex& z) {
  if (z.im().is_zero()) return Complex(cos_pi(z.re()));
  Real pb = const_pi(z.precision()) * z.im();
  return {cos_pi(z.re()) * cosh(pb), -(sin_pi(z.re()) * sinh(pb))};
}

Complex sin_pi(const Complex& z) {
  if (z.im().is_zero()) return Complex(sin_pi(z.re()));
  Real pb = const_pi(z.precision()) * z.im();
  return {sin_pi(z.re()) * cosh(pb), cos_pi(z.re()) * sinh(pb)};
}

Complex cosh(const Complex& z) {
  return {cosh(z.re()) * cos(z.im()), sinh(z.re()) * sin(z.im())};
}

bool close(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

}  // namespace bk2
