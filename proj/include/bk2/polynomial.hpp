#pragma once

// Dense polynomials with exact rational coefficients, index = power.

#include <gmpxx.h>

#include <string>
#include <vector>

#include "bk2/real.hpp"

namespace bk2 {

using Rational = mpq_class;

// "num/den", or "num" when the denominator is 1. Throws on malformed input.
Rational parse_rational(const std::string& text);
std::string format_rational(const Rational& q);

class ExactPolynomial {
 public:
  ExactPolynomial() : c_{Rational(0)} {}
  explicit ExactPolynomial(std::vector<Rational> coeffs);
  static ExactPolynomial constant(const Rational& c) { return ExactPolynomial({c}); }
  static ExactPolynomial monomial(int power, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.size() == 1 && c_[0] == 0; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](int i) const { return c_[static_cast<size_t>(i)]; }
  Rational coeff(int i) const { return i >= 0 && i <= degree() ? c_[static_cast<size_t>(i)] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;
  // Real and complex Horner on the coefficients rounded to the argument's precision.
  Real eval(const Real& x) const;
  Complex eval(const Complex& z) const;

  ExactPolynomial derivative() const;
  // p(x + s)
  ExactPolynomial shift(const Rational& s) const;
  // p(s * x)
  ExactPolynomial scale(const Rational& s) const;
  // p(-x)
  ExactPolynomial reflect() const { return scale(Rational(-1)); }

  ExactPolynomial& operator+=(const ExactPolynomial& o);
  ExactPolynomial& operator-=(const ExactPolynomial& o);
  ExactPolynomial& operator*=(const Rational& s);
  friend ExactPolynomial operator+(ExactPolynomial a, const ExactPolynomial& b) { return a += b; }
  friend ExactPolynomial operator-(ExactPolynomial a, const ExactPolynomial& b) { return a -= b; }
  friend ExactPolynomial operator*(ExactPolynomial a, const Rational& s) { return a *= s; }
  friend ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b);
  friend bool operator==(const ExactPolynomial& a, const ExactPolynomial& b) { return a.c_ == b.c_; }

  // Quotient and remainder; divisor must be nonzero.
  std::pair<ExactPolynomial, ExactPolynomial> divmod(const ExactPolynomial& d) const;

  // Integer coefficients obtained by clearing denominators (positive multiplier).
  std::vector<mpz_class> integer_coeffs() const;

  std::string to_string() const;
  std::string to_json() const;
  static ExactPolynomial from_json(const std::string& text);

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace bk2
