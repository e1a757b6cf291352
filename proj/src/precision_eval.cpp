#include "bk2/precision_eval.hpp"

#include <cstdlib>
#include <string>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/quadrature.hpp"

namespace bk2 {

namespace {

constexpr int kMaxEscalations = 3;

struct Attempt {
  Complex value;
  Real scale;  // magnitude of the largest partial contribution
  Real error;  // intrinsic error estimate of this attempt
};

// Runs `compute` at p and p + guard, escalating p by doubling until the two
// agree to roughly prec bits, either relative to the value or, for values
// swamped by cancellation, relative to the partial-term scale.
template <typename F>
PrecisionComplex guarded(Bits prec, F&& compute) {
  for (int esc = 0; esc <= kMaxEscalations; ++esc) {
    Bits p = prec << esc;
    Attempt a = compute(p);
    Attempt b = compute(p + kGuardBits);
    Real err = abs(a.value - b.value).with_precision(64) + b.error.with_precision(64);
    Real mag = abs(b.value).with_precision(64);
    Real scale = max(b.scale.with_precision(64), mag);
    const long slack = -static_cast<long>(prec) + 16;
    bool relative_ok = err <= ldexp(mag, slack);
    bool near_zero = mag < ldexp(scale, -static_cast<long>(prec) / 2);
    bool absolute_ok = near_zero && err <= ldexp(scale, slack);
    if (relative_ok || absolute_ok) {
      // Round the bound up a little so it survives the 64-bit rounding.
      err = err * Real(1.0 + 1e-12, 64);
      return {b.value.with_precision(p), err, p, near_zero && !relative_ok};
    }
  }
  throw PrecisionExhausted("guard comparison failed after " + std::to_string(kMaxEscalations) + " escalations");
}

Real real_from_long(long v, Bits p) { return Real(v, p); }

// log(2 cosh(x/2)), symmetric in x to the last bit.
Real log_two_cosh_half(const Real& x) {
  Real a = abs(x);
  return ldexp(a, -1) + log1p(exp(-a));
}

void check_middle_domain(long n, const Complex& w) {
  if (n < 1) throw DomainError("n must be positive");
  Real half_n = ldexp(Real(n, 64), -1);
  if (!(abs(w.re()) < half_n)) throw DomainError("|Re w| must be below n/2");
}

// Quadrature center and width for the middle integrands.
std::pair<Real, Real> middle_window(long n, const Complex& w) {
  Real rho = w.re().with_precision(64);
  Real c = ldexp(atanh(ldexp(rho, 1) / n), 1);
  Real s = ldexp(cosh(ldexp(c, -1)), 1) / sqrt(Real(n, 64));
  return {c, s};
}

struct Pieces {
  Complex i1, i2;
  Real l1_1, l1_2, e1, e2;
};

Pieces middle_pieces(long n, const Complex& w, Bits p) {
  const Real pi = const_pi(p);
  const Real pi2 = pi * pi;
  const Complex wp = w.with_precision(p);
  const bool real_w = wp.im().is_zero();
  auto [c, s] = middle_window(n, wp);
  // g(x) = e^{xw} (2 cosh(x/2))^{-n} / (pi^2 + x^2)
  auto mag = [&](const Real& x) { return exp(x * wp.re() - log_two_cosh_half(x) * n) / (pi2 + x * x); };
  if (real_w) {
    auto f = [&](const Real& x) {
      Real g = mag(x);
      return Complex(pi * g, x * g);
    };
    QuadratureResult q = integrate_line(f, c, s, p);
    Complex i1(q.value.re()), i2(q.value.im());
    return {i1, i2, q.l1, q.l1, q.error, q.error};
  }
  auto phase = [&](const Real& x) {
    Real th = x * wp.im();
    return Complex(cos(th), sin(th));
  };
  QuadratureResult q1 = integrate_line([&](const Real& x) { return phase(x) * (mag(x) * pi); }, c, s, p);
  QuadratureResult q2 = integrate_line([&](const Real& x) { return phase(x) * (mag(x) * x); }, c, s, p);
  return {q1.value, q2.value, q1.l1, q2.l1, q1.error, q2.error};
}

}  // namespace

Bits default_precision() {
  if (const char* env = std::getenv("BK2_PREC_BITS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return std::max<long>(v, 64);
  }
  return 128;
}

PrecisionComplex eval_poly_precision(int n, const Complex& z, Bits prec) {
  const ExactPolynomial p = build_diagonal(n);
  // Sum of |c_i| |z|^i bounds every Horner intermediate.
  Real az = abs(z).with_precision(64);
  Real scale(64);
  for (int i = p.degree(); i >= 0; --i) scale = scale * az + abs(Real(p[i], 64));
  return guarded(prec, [&](Bits bits) {
    Complex v = p.eval(z.with_precision(bits));
    Real err = ldexp(scale, -static_cast<long>(bits)) * (2L * (n + 1));
    return Attempt{v, scale, err};
  });
}

ScaledDiagonalValue eval_integral_rep(long n, const Complex& z, Bits prec) {
  if (n < 1) throw DomainError("integral representation needs n >= 1");
  if (!(z.re().sign() > 0 && z.re() < real_from_long(n, 64)))
    throw DomainError("integral representation needs 0 < Re z < n");
  // Peak of e^{x Re z} (1+e^x)^{-n}: sigmoid(x*) = Re z / n.
  Real a = z.re().with_precision(64);
  Real b = Real(n, 64) - a;
  Real c = log(a) - log(b);
  Real s = sqrt(Real(n, 64) / (a * b));
  PrecisionComplex v = guarded(prec, [&](Bits p) {
    const Real pi = const_pi(p);
    const Real pi2 = pi * pi;
    const Complex zp = z.with_precision(p);
    const Complex cz = cos_pi(zp) * pi, sz = sin_pi(zp);
    QuadratureResult q = [&] {
      if (zp.im().is_zero()) {
        const Real& cr = cz.re();
        const Real& sr = sz.re();
        return integrate_line(
            [&](const Real& x) {
              Real m = exp(x * zp.re() - softplus(x) * n);
              return Complex(m * (cr - x * sr) / (pi2 + x * x));
            },
            c, s, p);
      }
      return integrate_line(
          [&](const Real& x) {
            Real m = exp(x * zp.re() - softplus(x) * n) / (pi2 + x * x);
            Real th = x * zp.im();
            Complex e(m * cos(th), m * sin(th));
            return e * (cz - sz * x);
          },
          c, s, p);
    }();
    return Attempt{q.value / pi, q.l1 / pi, q.error / const_pi(64)};
  });
  return {n, z, std::move(v)};
}

std::pair<PrecisionComplex, PrecisionComplex> eval_I1_I2(long n, const Complex& w, Bits prec) {
  check_middle_domain(n, w);
  auto piece = [&](int which) {
    return guarded(prec, [&](Bits p) {
      Pieces pc = middle_pieces(n, w, p);
      if (which == 1) return Attempt{pc.i1, pc.l1_1, pc.e1};
      if (w.is_real() && w.re().is_zero()) return Attempt{Complex(p), Real(p), Real(64)};
      return Attempt{pc.i2, pc.l1_2, pc.e2};
    });
  };
  return {piece(1), piece(2)};
}

PrecisionComplex eval_middle(long n, const Complex& w, Bits prec) {
  check_middle_domain(n, w);
  const bool centered = w.is_real() && w.re().is_zero();
  return guarded(prec, [&](Bits p) {
    Pieces pc = middle_pieces(n, w, p);
    // The x-weighted piece is odd at w = 0.
    if (centered) pc.i2 = Complex(p);
    auto [cs, sn] = shifted_cos_sin(w.with_precision(p), n);
    Real acs = abs(cs), asn = abs(sn);
    Complex v = pc.i1 * cs - pc.i2 * sn;
    Real scale = pc.l1_1 * acs + pc.l1_2 * asn;
    Real err = pc.e1 * acs.with_precision(64) + pc.e2 * asn.with_precision(64);
    return Attempt{v, scale, err};
  });
}

Real scaled_derivative(long n, const Real& x) {
  const Bits out = x.precision();
  const Bits p = out + 32;
  Real xp = x.with_precision(p);
  Real sp = sin_pi(xp);
  if (sp.is_zero()) return Real(out);
  Real lg = lgamma(xp).first + lgamma(Real(n, p) - xp).first - lgamma(Real(n, p)).first;
  return (-(sp * exp(lg)) / const_pi(p)).with_precision(out);
}

Complex rho_kernel(const Complex& z, const Real& u) {
  const Bits p = std::max(z.precision(), u.precision());
  const Real pi = const_pi(p);
  Real lu = log(u.with_precision(p));
  Complex pw = exp((z.with_precision(p) - 1L) * lu);
  Complex num = cos_pi(z) * pi - sin_pi(z) * lu;
  return pw * num / (pi * pi + lu * lu);
}

Complex kernel_integrand(long n, const Complex& z, const Real& u) {
  const Bits p = std::max(z.precision(), u.precision());
  Real damp = exp(-(log1p(u.with_precision(p)) * n));
  return rho_kernel(z, u) * damp;
}

std::pair<Complex, Complex> shifted_cos_sin(const Complex& w, long n) {
  Complex c = cos_pi(w), s = sin_pi(w);
  switch (((n % 4) + 4) % 4) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

}  // namespace bk2
