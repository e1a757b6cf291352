#include "bk2/polynomial.hpp"

#include <nlohmann/json.hpp>

#include <sstream>
#include <stdexcept>

namespace bk2 {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ') s += ch;
  if (s.empty()) throw std::invalid_argument("empty rational");
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational: " + text);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

ExactPolynomial::ExactPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  if (c_.empty()) c_.emplace_back(0);
  for (auto& q : c_) q.canonicalize();
  trim();
}

ExactPolynomial ExactPolynomial::monomial(int power, const Rational& c) {
  std::vector<Rational> v(static_cast<size_t>(power) + 1, Rational(0));
  v.back() = c;
  return ExactPolynomial(std::move(v));
}

void ExactPolynomial::trim() {
  while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
}

Rational ExactPolynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real ExactPolynomial::eval(const Real& x) const {
  Bits p = x.precision();
  Real acc(p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= x;
    acc += Real(*it, p);
  }
  return acc;
}

Complex ExactPolynomial::eval(const Complex& z) const {
  Bits p = z.precision();
  Complex acc(p);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc *= z;
    acc.re() += Real(*it, p);
  }
  return acc;
}

ExactPolynomial ExactPolynomial::derivative() const {
  if (degree() == 0) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
  return ExactPolynomial(std::move(d));
}

ExactPolynomial ExactPolynomial::shift(const Rational& s) const {
  // Repeated synthetic division (Taylor shift).
  std::vector<Rational> a = c_;
  const size_t n = a.size();
  for (size_t i = 0; i + 1 < n; ++i)
    for (size_t j = n - 1; j-- > i;) a[j] += s * a[j + 1];
  return ExactPolynomial(std::move(a));
}

ExactPolynomial ExactPolynomial::scale(const Rational& s) const {
  std::vector<Rational> a = c_;
  Rational f = 1;
  for (auto& q : a) {
    q *= f;
    f *= s;
  }
  return ExactPolynomial(std::move(a));
}

ExactPolynomial& ExactPolynomial::operator+=(const ExactPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator-=(const ExactPolynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Rational(0));
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

ExactPolynomial& ExactPolynomial::operator*=(const Rational& s) {
  for (auto& q : c_) q *= s;
  trim();
  return *this;
}

ExactPolynomial operator*(const ExactPolynomial& a, const ExactPolynomial& b) {
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return ExactPolynomial(std::move(r));
}

std::pair<ExactPolynomial, ExactPolynomial> ExactPolynomial::divmod(const ExactPolynomial& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> r = c_;
  int dd = d.degree();
  if (degree() < dd) return {ExactPolynomial(), *this};
  std::vector<Rational> q(static_cast<size_t>(degree() - dd) + 1, Rational(0));
  for (int i = degree() - dd; i >= 0; --i) {
    Rational f = r[static_cast<size_t>(i + dd)] / d.leading();
    q[static_cast<size_t>(i)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(i + j)] -= f * d.c_[static_cast<size_t>(j)];
  }
  r.resize(static_cast<size_t>(std::max(dd, 1)));
  return {ExactPolynomial(std::move(q)), ExactPolynomial(std::move(r))};
}

std::vector<mpz_class> ExactPolynomial::integer_coeffs() const {
  mpz_class l = 1;
  for (const auto& q : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> out;
  out.reserve(c_.size());
  for (const auto& q : c_) out.emplace_back(q.get_num() * (l / q.get_den()));
  return out;
}

std::string ExactPolynomial::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& q = c_[static_cast<size_t>(i)];
    if (q == 0 && !(i == 0 && first)) continue;
    Rational a = abs(q);
    if (first) {
      if (q < 0) os << "-";
    } else {
      os << (q < 0 ? " - " : " + ");
    }
    if (a != 1 || i == 0) os << (i > 0 && a.get_den() != 1 ? "(" + a.get_str() + ")" : a.get_str());
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string ExactPolynomial::to_json() const {
  nlohmann::json j;
  j["degree"] = is_zero() ? 0 : degree();
  auto arr = nlohmann::json::array();
  for (const auto& q : c_) arr.push_back(format_rational(q));
  j["coeffs"] = arr;
  return j.dump();
}

ExactPolynomial ExactPolynomial::from_json(const std::string& text) {
  auto j = nlohmann::json::parse(text);
  std::vector<Rational> v;
  for (const auto& s : j.at("coeffs")) v.push_back(parse_rational(s.get<std::string>()));
  ExactPolynomial p(std::move(v));
  if (j.at("degree").get<int>() != p.degree()) throw std::invalid_argument("degree field disagrees with coefficients");
  return p;
}

}  // namespace bk2
