#pragma once

// Arbitrary-precision real and complex scalars on top of MPFR.
//
// Every Real carries its own precision in bits. Binary operations round to
// the larger precision of the two operands; unary functions keep the
// precision of their argument. Nothing here consults a global default.

#include <mpfr.h>
#include <gmpxx.h>

#include <algorithm>
#include <compare>
#include <string>
#include <string_view>
#include <utility>

namespace bk2 {

using Bits = mpfr_prec_t;

class Real {
 public:
  explicit Real(Bits prec = 128) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Real(double x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(int x, Bits prec) : Real(static_cast<long>(x), prec) {}
  Real(const mpz_class& x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN); }
  Real(const mpq_class& x, Bits prec) { mpfr_init2(v_, prec); mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN); }
  Real(std::string_view text, Bits prec);

  Real(const Real& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  Bits precision() const { return mpfr_get_prec(v_); }
  Real with_precision(Bits prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }
  // Binary exponent e with 2^(e-1) <= |x| < 2^e; very negative for zero.
  long exponent() const;
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }
  // Exact binary value as a rational.
  mpq_class to_rational() const;
  // Scientific notation with `digits` significant digits.
  std::string to_string(int digits = 30) const;

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o);
  Real& operator-=(const Real& o);
  Real& operator*=(const Real& o);
  Real& operator/=(const Real& o);
  Real& operator*=(long k) { mpfr_mul_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator/=(long k) { mpfr_div_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator+=(long k) { mpfr_add_si(v_, v_, k, MPFR_RNDN); return *this; }
  Real& operator-=(long k) { mpfr_sub_si(v_, v_, k, MPFR_RNDN); return *this; }

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator+(Real a, long k) { return a += k; }
  friend Real operator-(Real a, long k) { return a -= k; }
  friend Real operator*(Real a, long k) { return a *= k; }
  friend Real operator/(Real a, long k) { return a /= k; }
  friend Real operator+(long k, Real a) { return a += k; }
  friend Real operator*(long k, Real a) { return a *= k; }
  friend Real operator-(long k, const Real& a) {
    Real r(a.precision());
    mpfr_si_sub(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long k, const Real& a) {
    Real r(a.precision());
    mpfr_si_div(r.v_, k, a.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend std::partial_ordering operator<=>(const Real& a, const Real& b) {
    if (mpfr_unordered_p(a.v_, b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }
  // Comparing with a double would silently truncate it to long.
  friend bool operator==(const Real&, double) = delete;
  friend std::partial_ordering operator<=>(const Real&, double) = delete;
  friend bool operator==(const Real& a, long k) { return mpfr_cmp_si(a.v_, k) == 0; }
  friend std::partial_ordering operator<=>(const Real& a, long k) {
    int c = mpfr_cmp_si(a.v_, k);
    return c < 0 ? std::partial_ordering::less
                 : (c > 0 ? std::partial_ordering::greater : std::partial_ordering::equivalent);
  }

 private:
  mpfr_t v_;
};

// x * 2^e, exact.
Real ldexp(const Real& x, long e);
Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real expm1(const Real& x);
Real log(const Real& x);
Real log1p(const Real& x);
Real log2(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real tan(const Real& x);
Real atan(const Real& x);
Real atan2(const Real& y, const Real& x);
Real sinh(const Real& x);
Real cosh(const Real& x);
Real tanh(const Real& x);
Real atanh(const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long k);
Real floor(const Real& x);
Real round(const Real& x);
Real min(const Real& a, const Real& b);
Real max(const Real& a, const Real& b);
Real gamma(const Real& x);
// log|Gamma(x)| and the sign of Gamma(x).
std::pair<Real, int> lgamma(const Real& x);
Real digamma(const Real& x);
// cos(pi x) and sin(pi x) with exact reduction of x modulo 2, so that large
// arguments such as n/2 + w lose no accuracy.
Real cos_pi(const Real& x);
Real sin_pi(const Real& x);
// log(1 + e^x) without overflow.
Real softplus(const Real& x);

Real const_pi(Bits prec);
Real const_euler(Bits prec);
Real const_log2(Bits prec);
Real zeta(unsigned long j, Bits prec);

class Complex {
 public:
  explicit Complex(Bits prec = 128) : re_(prec), im_(prec) {}
  Complex(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
  explicit Complex(const Real& re) : re_(re), im_(re.precision()) {}
  Complex(double re, double im, Bits prec) : re_(re, prec), im_(im, prec) {}

  const Real& re() const { return re_; }
  const Real& im() const { return im_; }
  Real& re() { return re_; }
  Real& im() { return im_; }
  Bits precision() const { return std::max(re_.precision(), im_.precision()); }
  Complex with_precision(Bits p) const { return {re_.with_precision(p), im_.with_precision(p)}; }
  bool is_real() const { return im_.is_zero(); }
  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_finite() const { return re_.is_finite() && im_.is_finite(); }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& o) { re_ += o.re_; im_ += o.im_; return *this; }
  Complex& operator-=(const Complex& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);
  Complex& operator*=(const Real& r) { re_ *= r; im_ *= r; return *this; }
  Complex& operator/=(const Real& r) { re_ /= r; im_ /= r; return *this; }
  Complex& operator*=(long k) { re_ *= k; im_ *= k; return *this; }
  Complex& operator/=(long k) { re_ /= k; im_ /= k; return *this; }

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend Complex operator*(Complex a, const Real& b) { return a *= b; }
  friend Complex operator*(const Real& b, Complex a) { return a *= b; }
  friend Complex operator/(Complex a, const Real& b) { return a /= b; }
  friend Complex operator*(Complex a, long k) { return a *= k; }
  friend Complex operator/(Complex a, long k) { return a /= k; }
  friend Complex operator+(Complex a, const Real& b) { a.re_ += b; return a; }
  friend Complex operator-(Complex a, const Real& b) { a.re_ -= b; return a; }
  friend Complex operator+(Complex a, long k) { a.re_ += k; return a; }
  friend Complex operator-(Complex a, long k) { a.re_ -= k; return a; }
  friend Complex operator-(long k, const Complex& a) { return {k - a.re_, -a.im_}; }

  std::string to_string(int digits = 30) const;

 private:
  Real re_;
  Real im_;
};

Complex conj(const Complex& z);
Real abs(const Complex& z);
Real norm(const Complex& z);  // |z|^2
Real arg(const Complex& z);
Complex exp(const Complex& z);
Complex log(const Complex& z);  // principal branch
Complex sqrt(const Complex& z);
Complex pow(const Complex& z, long k);
Complex pow(const Complex& z, const Complex& w);  // principal branch
Complex sin(const Complex& z);
Complex cos(const Complex& z);
Complex cos_pi(const Complex& z);
Complex sin_pi(const Complex& z);
Complex cosh(const Complex& z);
// 1/Gamma(w), entire; exactly zero at the non-positive integers.
Complex recip_gamma(const Complex& w);
Real recip_gamma(const Real& x);

// |a - b| <= tol, convenience for tests and checks.
bool close(const Real& a, const Real& b, const Real& tol);

}  // namespace bk2
