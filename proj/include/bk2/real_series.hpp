#pragma once

// Truncated power series with arbitrary-precision real coefficients, used by
// the formal zero solvers. All results have the length of the first operand.

#include <functional>
#include <vector>

#include "bk2/real.hpp"

namespace bk2::rseries {

using RSeries = std::vector<Real>;

RSeries zeros(size_t n, Bits prec);
RSeries mul(const RSeries& a, const RSeries& b);
RSeries add(const RSeries& a, const RSeries& b);
RSeries sub(const RSeries& a, const RSeries& b);
RSeries scale(const RSeries& a, const Real& s);
// Powers a^0..a^m, truncated to the length of a.
std::vector<RSeries> powers(const RSeries& a, int m);
// sum_i c_i a^i for a polynomial with real coefficients.
RSeries compose_poly(const std::vector<Real>& c, const RSeries& a);
// sin(s a), cos(s a) for a with zero constant term.
RSeries sin_of(const RSeries& a, const Real& s);
RSeries cos_of(const RSeries& a, const Real& s);

// Solves F(eps, h) = 0 for eps = sum_{i>=1} e_i h^i, given F as a map on
// truncated series (length order+1) and the nonzero constant D = dF/deps at
// the origin. Each pass fixes one more coefficient.
RSeries solve_formal(const std::function<RSeries(const RSeries&)>& F, const Real& D, int order, Bits prec);

}  // namespace bk2::rseries
