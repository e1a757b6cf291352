#pragma once

// Double-exponential quadrature on the whole real line,
//   x = c + s sinh((pi/2) sinh t),
// with step halving until successive estimates agree.

#include <functional>

#include "bk2/real.hpp"

namespace bk2 {

struct QuadratureResult {
  Complex value;
  // Sum of |term| * h: the scale against which cancellation is judged.
  Real l1;
  // Estimated contribution of the discarded tails plus the last step change.
  Real error;
  int levels = 0;
  long evaluations = 0;
};

using LineIntegrand = std::function<Complex(const Real& x)>;

// Integrates f over the real line. The center c and scale s should put the
// bulk of the integrand near t = 0. Throws QuadratureNonConvergence if the
// tails do not decay or the step-halving does not settle.
QuadratureResult integrate_line(const LineIntegrand& f, const Real& c, const Real& s, Bits prec);

}  // namespace bk2
