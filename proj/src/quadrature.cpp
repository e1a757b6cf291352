#include "bk2/quadrature.hpp"

#include "bk2/errors.hpp"

namespace bk2 {

namespace {

constexpr int kMaxLevel = 12;
constexpr double kMaxT = 9.0;

struct Node {
  Real x;
  Real weight;
};

Node node(const Real& t, const Real& c, const Real& s, const Real& half_pi) {
  Real u = half_pi * sinh(t);
  Real x = c + s * sinh(u);
  Real w = s * half_pi * cosh(t) * cosh(u);
  return {std::move(x), std::move(w)};
}

struct Side {
  Complex sum;
  Real abs_sum;
  Real tail;  // |terms| of the trailing small run
  long evaluations = 0;
};

// Sums f at t = sign * (first + j * stride) * h for j = 0, 1, ... until three
// consecutive terms fall below `tiny` relative to the running absolute sum.
Side sweep(const LineIntegrand& f, const Real& c, const Real& s, const Real& h, long first, long stride, int sign,
           const Real& l1_prior, const Real& half_pi, Bits prec) {
  Side out{Complex(prec), Real(prec), Real(64), 0};
  const long tiny_exp = -static_cast<long>(prec) - 20;
  int small_run = 0;
  Real run_tail(64);
  for (long j = first;; j += stride) {
    Real t = h * j;
    if (t.to_double() > kMaxT) {
      if (small_run > 0) break;
      throw QuadratureNonConvergence("integrand tails do not decay within the double-exponential window");
    }
    if (sign < 0) t = -t;
    Node nd = node(t, c, s, half_pi);
    Complex term = f(nd.x) * nd.weight;
    ++out.evaluations;
    if (!term.is_finite()) throw QuadratureNonConvergence("non-finite integrand value");
    Real a = abs(term);
    out.sum += term;
    out.abs_sum += a;
    Real ref = max(out.abs_sum, l1_prior);
    bool small = a.is_zero() || (!ref.is_zero() && a.exponent() - ref.exponent() < tiny_exp);
    if (small && t.to_double() * sign >= 1.0) {
      ++small_run;
      run_tail += a.with_precision(64);
      if (small_run >= 3) break;
    } else {
      small_run = 0;
      run_tail = Real(64);
    }
  }
  out.tail = run_tail;
  return out;
}

}  // namespace

QuadratureResult integrate_line(const LineIntegrand& f, const Real& c, const Real& s, Bits prec) {
  const Real half_pi = ldexp(const_pi(prec), -1);
  const Real cc = c.with_precision(prec);
  const Real ss = s.with_precision(prec);
  Real h = ldexp(Real(1L, prec), -1);

  QuadratureResult r{Complex(prec), Real(prec), Real(64), 0, 0};
  // Level 0: every integer multiple of h.
  Node n0 = node(Real(prec), cc, ss, half_pi);
  Complex center = f(n0.x) * n0.weight;
  Real abs_total = abs(center);
  Side right = sweep(f, cc, ss, h, 1, 1, +1, abs_total, half_pi, prec);
  Side left = sweep(f, cc, ss, h, 1, 1, -1, abs_total, half_pi, prec);
  Complex right_sum = right.sum, left_sum = left.sum;
  abs_total += right.abs_sum + left.abs_sum;
  r.evaluations = 1 + right.evaluations + left.evaluations;
  Complex estimate = (center + (right_sum + left_sum)) * h;
  Real tail = (right.tail + left.tail) * h.with_precision(64);

  for (int level = 1; level <= kMaxLevel; ++level) {
    h = ldexp(h, -1);
    // New nodes are the odd multiples of the halved step.
    Real l1 = abs_total * h;
    Side nr = sweep(f, cc, ss, h, 1, 2, +1, abs_total, half_pi, prec);
    Side nl = sweep(f, cc, ss, h, 1, 2, -1, abs_total, half_pi, prec);
    right_sum += nr.sum;
    left_sum += nl.sum;
    abs_total += nr.abs_sum + nl.abs_sum;
    r.evaluations += nr.evaluations + nl.evaluations;
    Complex next = (center + (right_sum + left_sum)) * h;
    Real diff = abs(next - estimate);
    estimate = std::move(next);
    tail = (nr.tail + nl.tail) * h.with_precision(64) + tail * Real(0.5, 64);
    l1 = abs_total * h;
    bool settled = diff.is_zero() || (!l1.is_zero() && diff.exponent() - l1.exponent() < -static_cast<long>(prec) + 10);
    if (level >= 2 && settled) {
      r.value = estimate;
      r.l1 = l1;
      r.error = diff.with_precision(64) + tail;
      r.levels = level;
      return r;
    }
  }
  throw QuadratureNonConvergence("step halving did not settle");
}

}  // namespace bk2
