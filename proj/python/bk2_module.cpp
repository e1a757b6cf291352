// Python bindings: exact polynomials, scaled evaluation, zeros and series.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <nlohmann/json.hpp>

#include "bk2/asymptotics.hpp"
#include "bk2/conjecture.hpp"
#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/precision_eval.hpp"
#include "bk2/verify.hpp"
#include "bk2/zeros.hpp"

namespace py = pybind11;
using namespace bk2;

namespace {

py::object fraction(const Rational& q) {
  static py::object F = py::module_::import("fractions").attr("Fraction");
  return F(format_rational(q));
}

// Accepts int, Fraction or str ("p/q").
Rational to_rational(const py::handle& h) {
  if (py::isinstance<py::int_>(h)) return parse_rational(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return parse_rational(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator"))
    return Rational(mpz_class(py::str(h.attr("numerator")).cast<std::string>()),
                    mpz_class(py::str(h.attr("denominator")).cast<std::string>()));
  throw py::type_error("expected int, fractions.Fraction or 'p/q' string");
}

Real to_real(const py::handle& h, Bits prec) {
  if (py::isinstance<py::float_>(h)) return Real(h.cast<double>(), prec);
  return Real(to_rational(h), prec);
}

py::list fractions(const ExactPolynomial& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(fraction(c));
  return out;
}

py::dict zero_dict(const CertifiedZero& z) {
  py::dict d;
  d["k"] = z.k;
  d["lo"] = fraction(z.lo);
  d["hi"] = fraction(z.hi);
  d["value"] = z.value.to_string(30);
  d["error_radius"] = z.error_radius.to_string(6);
  return d;
}

py::object parse_json(const std::string& text) { return py::module_::import("json").attr("loads")(text); }

}  // namespace

PYBIND11_MODULE(bk2, m) {
  m.doc() = "Diagonal generalized Bernoulli polynomials B_n^(n): exact values, zeros and asymptotics";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<PrecisionExhausted>(m, "PrecisionExhausted", PyExc_ArithmeticError);

  m.def("diagonal_coeffs", [](int n) { return fractions(build_diagonal(n)); }, py::arg("n"),
        "Coefficients of B_n^(n) as Fractions, constant term first.");
  m.def("generalized_coeffs", [](int n, const py::object& a) { return fractions(build_generalized(n, to_rational(a))); },
        py::arg("n"), py::arg("a"));
  m.def("eval_exact", [](int n, const py::object& x) { return fraction(build_diagonal(n)(to_rational(x))); },
        py::arg("n"), py::arg("x"));
  m.def(
      "scaled_value",
      [](long n, const py::object& re, const py::object& im, Bits prec) {
        Complex z(to_real(re, prec), to_real(im, prec));
        auto v = eval_integral_rep(n, z, prec);
        py::dict d;
        d["re"] = v.value.value.re().to_string(30);
        d["im"] = v.value.value.im().to_string(30);
        d["error_bound"] = v.value.error_bound.to_string(6);
        d["value"] = std::complex<double>(v.value.value.re().to_double(), v.value.value.im().to_double());
        return d;
      },
      py::arg("n"), py::arg("re"), py::arg("im") = 0, py::arg("prec") = 128,
      "S_n(z) = (-1)^n B_n^(n)(z)/n! from the integral representation, 0 < Re z < n.");
  m.def(
      "real_zeros",
      [](int n, Bits prec) {
        py::list out;
        for (const auto& z : real_zeros_exact(n, prec).zeros) out.append(zero_dict(z));
        return out;
      },
      py::arg("n"), py::arg("prec") = 128);
  m.def("zero_large_n", [](long n, long k, Bits prec) { return zero_dict(real_zero_large_n(n, k, prec)); },
        py::arg("n"), py::arg("k"), py::arg("prec") = 128);
  m.def(
      "attractor_roots",
      [](int n, const py::object& lam, Bits prec) {
        std::vector<std::complex<double>> out;
        for (const auto& r : complex_zeros(attractor_polynomial(n, to_rational(lam)), prec))
          out.emplace_back(r.value.re().to_double(), r.value.im().to_double());
        return out;
      },
      py::arg("n"), py::arg("lam"), py::arg("prec") = 128);
  m.def(
      "expansion",
      [](const std::string& target, int k, const std::string& parity, int order, Bits prec) {
        AsymptoticSeries s;
        if (target == "small-zero") s = small_zero_expansion(k, order, prec);
        else if (target == "large-zero") s = large_zero_expansion(k, order, prec);
        else if (target == "middle-zero") s = middle_zero_expansion(k, parity == "odd" ? Parity::Odd : Parity::Even, order, prec);
        else if (target == "dnumber") s = dnumber_expansion(order, prec);
        else if (target == "gauss-encke") s = gauss_encke_expansion(order, prec);
        else throw DomainError("unknown target: " + target);
        return parse_json(s.to_json());
      },
      py::arg("target"), py::arg("k") = 1, py::arg("parity") = "even", py::arg("order") = 4, py::arg("prec") = 128);
  m.def("hessenberg_charpoly", [](int n) { return fractions(hessenberg_charpoly(n)); }, py::arg("n"));
  m.def(
      "modulus_identity_residual",
      [](int n, const py::object& x, const py::object& y) {
        return fraction(modulus_identity_check(n, to_rational(x), to_rational(y)));
      },
      py::arg("n"), py::arg("x"), py::arg("y"));
  m.def("criteria", [] {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& c : criteria()) out.emplace_back(c.id, c.title);
    return out;
  });
}
