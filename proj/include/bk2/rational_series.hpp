#pragma once

// Truncated formal power series over the rationals. A series is the vector of
// its first N coefficients; all operations keep the length of the inputs.

#include <vector>

#include <gmpxx.h>

namespace bk2::series {

using QSeries = std::vector<mpq_class>;

QSeries mul(const QSeries& a, const QSeries& b);
// 1/a, requires a[0] != 0.
QSeries inverse(const QSeries& a);
// log a, requires a[0] == 1.
QSeries log(const QSeries& a);
// exp a, requires a[0] == 0.
QSeries exp(const QSeries& a);
// a^r = exp(r log a), requires a[0] == 1.
QSeries power(const QSeries& a, const mpq_class& r);

}  // namespace bk2::series
