#pragma once

#include "bk2/polynomial.hpp"
#include "bk2/real.hpp"

namespace bk2 {

// Classical Bernoulli number B_k (B_1 = -1/2), cached.
Rational bernoulli_number(int k);

// log Gamma(w) on the principal branch for Re w >= 1/2 via shifted Stirling series.
Complex lgamma_stirling(const Complex& w);

}  // namespace bk2
