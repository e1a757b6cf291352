#include "bk2/conjecture.hpp"

#include <algorithm>

#include <nlohmann/json.hpp>

#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/zeros.hpp"

namespace bk2 {

namespace {

Rational C(long n, long k) { return Rational(binomial(n, k)); }

}  // namespace

namespace {

// (-1)^k sum_l (-1)^l C(n,l) C(n,2k-l) fam[i(l)] fam[j(l)], over polynomials
// or over their values at one point.
template <class T>
T signed_sum(const std::vector<T>& fam, int n, int k, bool alpha) {
  T acc{};
  for (int l = 0; l <= 2 * k; ++l) {
    T t = alpha ? fam[n - l] * fam[n - 2 * k + l] : fam[l] * fam[2 * k - l];
    t *= C(n, l) * C(n, 2 * k - l);
    if (l % 2) acc -= t;
    else acc += t;
  }
  return k % 2 ? acc * Rational(-1) : acc;
}

}  // namespace

ExactPolynomial alpha_poly(int n, int k) {
  if (k < 1 || 2 * k > n) throw DomainError("alpha_{n,k} needs 1 <= 2k <= n");
  return signed_sum(build_generalized_family(n, Rational(n)), n, k, true);
}

ExactPolynomial beta_poly(int n, int k) {
  if (k < 0 || 2 * k > n - 1) throw DomainError("beta_{n,k} needs 0 <= 2k <= n-1");
  return signed_sum(build_generalized_family(n, Rational(n)), n, k, false);
}

Rational modulus_identity_check(int n, const Rational& x, const Rational& y) {
  if (n < 1) throw DomainError("modulus identity needs n >= 1");
  auto fam = build_generalized_family(n, Rational(n));
  const auto& p = fam[n];
  auto [re, im] = eval_exact_complex(p, x, y);
  std::vector<Rational> v;
  for (const auto& q : fam) v.push_back(q(x));
  Rational lhs = re * re + im * im;
  Rational bx = p(x);
  Rational rhs = bx * bx;
  Rational y2 = y * y;
  Rational ypow = y2;
  for (int k = 1; 2 * k <= n; ++k, ypow *= y2) rhs += signed_sum(v, n, k, true) * ypow;
  for (int k = 0; 2 * k <= n - 1; ++k) {
    Rational yp = 1;
    for (int i = 0; i < n - k; ++i) yp *= y2;
    rhs += signed_sum(v, n, k, false) * yp;
  }
  return lhs - rhs;
}

namespace {

using Sturm = std::vector<ExactPolynomial>;

// Positive multiple of p with coprime integer coefficients; Sturm counts only
// see signs, and integer coefficients keep the remainders small.
ExactPolynomial primitive(const ExactPolynomial& p) {
  mpz_class den = 1, g = 0;
  for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
  std::vector<Rational> v;
  for (const auto& c : p.coeffs()) {
    v.emplace_back(c * den);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.back().get_num().get_mpz_t());
  }
  if (g == 0) return p;
  for (auto& c : v) c /= g;
  return ExactPolynomial(std::move(v));
}

Sturm sturm_sequence(const ExactPolynomial& p) {
  Sturm s{primitive(p), primitive(p.derivative())};
  while (!s.back().is_zero() && s.back().degree() > 0) {
    auto r = s[s.size() - 2].divmod(s.back()).second;
    if (r.is_zero()) break;
    s.push_back(primitive(r) * Rational(-1));
  }
  if (s.back().is_zero()) s.pop_back();
  return s;
}

int variations(const Sturm& s, const Rational& t) {
  int v = 0, last = 0;
  for (const auto& q : s) {
    int sg = sgn(q(t));
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++v;
    last = sg;
  }
  return v;
}

// Distinct roots in (a, b].
int count_roots(const Sturm& s, const Rational& a, const Rational& b) { return variations(s, a) - variations(s, b); }

Rational cauchy_bound(const ExactPolynomial& p) {
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) m = std::max(m, Rational(abs(p.coeff(i) / p.leading())));
  return m + 1;
}

// A split point near the midpoint of (a, b) where p does not vanish.
Rational split_point(const ExactPolynomial& p, const Rational& a, const Rational& b) {
  Rational mid = (a + b) / 2;
  Rational step = (b - a) / 1024;
  for (int j = 1; p(mid) == 0; ++j) mid = (a + b) / 2 + step * (j % 2 ? j : -j);
  return mid;
}

}  // namespace

std::vector<RootInterval> isolate_real_roots(const ExactPolynomial& p, long bits) {
  std::vector<RootInterval> out;
  if (p.degree() < 1) return out;
  Sturm s = sturm_sequence(p);
  Rational B = cauchy_bound(p);
  Rational width = Rational(1) / Rational(mpz_class(1) << static_cast<mp_bitcnt_t>(bits));
  std::vector<RootInterval> stack{{-B, B}};
  while (!stack.empty()) {
    auto [a, b] = stack.back();
    stack.pop_back();
    int c = count_roots(s, a, b);
    if (c == 0) continue;
    if (c == 1) {
      while (b - a > width) {
        Rational m = (a + b) / 2;
        if (p(m) == 0) {
          a = b = m;
          break;
        }
        if (count_roots(s, a, m) == 1) b = m;
        else a = m;
      }
      out.push_back({a, b});
      continue;
    }
    Rational m = split_point(p, a, b);
    stack.push_back({m, b});
    stack.push_back({a, m});
  }
  std::sort(out.begin(), out.end(), [](const auto& u, const auto& v) { return u.lo < v.lo; });
  return out;
}

namespace {

PolyScan scan_one(const std::string& name, int n, int k, const ExactPolynomial& p, const std::vector<Rational>& grid) {
  PolyScan r;
  r.name = name;
  r.n = n;
  r.k = k;
  bool first = true;
  for (const auto& x : grid) {
    Rational v = p(x);
    if (first || v < r.grid_min) {
      r.grid_min = v;
      r.grid_argmin = x;
      first = false;
    }
    if (v < 0 && r.nonnegative) {
      r.nonnegative = false;
      r.counterexample_x = x;
    }
  }
  r.global_min = r.grid_min.get_d();
  r.global_argmin = r.grid_argmin.get_d();
  if (p.degree() < 1) {
    r.certified = true;
    return r;
  }
  // Minimum over the critical points, refined to 2^-40; an exact negative
  // value there is a counterexample at any n.
  for (const auto& iv : isolate_real_roots(p.derivative())) {
    Rational c = (iv.lo + iv.hi) / 2;
    Rational v = p(c);
    if (v.get_d() < r.global_min) {
      r.global_min = v.get_d();
      r.global_argmin = c.get_d();
    }
    if (v < 0 && r.nonnegative) {
      r.nonnegative = false;
      r.counterexample_x = c;
    }
  }
  if (n > kCertifiedPositivityMaxN) return r;
  // Sign verdict: p keeps its sign between consecutive distinct roots, so a
  // test point in every gap and beyond both ends decides p >= 0 on R.
  auto roots = isolate_real_roots(p);
  Rational B = cauchy_bound(p);
  std::vector<Rational> tests{-B, B};
  for (size_t i = 0; i + 1 < roots.size(); ++i) tests.push_back((roots[i].hi + roots[i + 1].lo) / 2);
  for (const auto& t : tests) {
    Rational v = p(t);
    if (v < 0 && r.nonnegative) {
      r.nonnegative = false;
      r.counterexample_x = t;
    }
  }
  r.certified = true;
  return r;
}

}  // namespace

PositivityReport positivity_scan(int n, int k, const std::vector<Rational>& x_grid) {
  if (n < 1 || k < 0) throw DomainError("positivity_scan needs n >= 1, k >= 0");
  PositivityReport rep;
  rep.n = n;
  rep.k = k;
  if (k >= 1 && 2 * k <= n) rep.scans.push_back(scan_one("alpha", n, k, alpha_poly(n, k), x_grid));
  if (2 * k <= n - 1) rep.scans.push_back(scan_one("beta", n, k, beta_poly(n, k), x_grid));
  return rep;
}

std::vector<std::vector<Rational>> hessenberg_matrix(int n) {
  if (n < 0) throw DomainError("hessenberg_matrix needs n >= 0");
  auto b = bernoulli2_values(n + 1);
  const int m = n + 1;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(m, Rational(0)));
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < i; ++j) a[i][j] = C(i, j) * b[i - j + 1] / (i - j + 1);
    a[i][i] = b[1] + i;
    if (i + 1 < m) a[i][i + 1] = 1;
  }
  return a;
}

namespace {

// Fraction-free determinant of an integer matrix.
mpz_class bareiss_det(std::vector<std::vector<mpz_class>> M) {
  const size_t m = M.size();
  if (m == 0) return 1;
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < m; ++k) {
    if (M[k][k] == 0) {
      size_t r = k + 1;
      while (r < m && M[r][k] == 0) ++r;
      if (r == m) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < m; ++i) {
      for (size_t j = k + 1; j < m; ++j) {
        mpz_class t = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = t;
      }
    }
    prev = M[k][k];
  }
  return sign * M[m - 1][m - 1];
}

}  // namespace

ExactPolynomial hessenberg_charpoly(int n) {
  auto a = hessenberg_matrix(n);
  const int m = n + 1;
  mpz_class D = 1;
  for (const auto& row : a)
    for (const auto& v : row) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), v.get_den().get_mpz_t());
  Rational Dm = 1;
  for (int i = 0; i < m; ++i) Dm *= Rational(D);
  // Values at x = 0..m, then Newton interpolation.
  std::vector<Rational> xs, ys;
  for (int node = 0; node <= m; ++node) {
    std::vector<std::vector<mpz_class>> M(m, std::vector<mpz_class>(m));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Rational e = (i == j ? Rational(node) : Rational(0)) - a[i][j];
        Rational s = e * Rational(D);
        M[i][j] = s.get_num();
      }
    xs.emplace_back(node);
    ys.push_back(Rational(bareiss_det(std::move(M))) / Dm);
  }
  std::vector<Rational> dd = ys;
  for (int j = 1; j <= m; ++j)
    for (int i = m; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  ExactPolynomial p = ExactPolynomial::constant(dd[m]);
  for (int i = m - 1; i >= 0; --i)
    p = p * ExactPolynomial({-xs[i], Rational(1)}) + ExactPolynomial::constant(dd[i]);
  return p;
}

EigenReport hessenberg_eigen_check(int n, Bits prec) {
  if (n < 0 || n > 200) throw DomainError("hessenberg_eigen_check needs 0 <= n <= 200");
  const int m = n + 1;
  // Eigenvalues of this non-normal matrix are as sensitive as polynomial
  // roots; carry the same margin as the complex root finder.
  const Bits wp = prec + 64 + 3 * static_cast<Bits>(m);
  auto a = hessenberg_matrix(n);
  // Transpose: upper Hessenberg with the same spectrum.
  std::vector<std::vector<Real>> H(m, std::vector<Real>(m, Real(wp)));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) H[j][i] = Real(a[i][j], wp);

  EigenReport rep;
  rep.n = n;
  std::vector<Real> eig;
  int hi = m - 1;
  int iter = 0;
  const long tiny = -static_cast<long>(wp) + 4;
  while (hi >= 0) {
    if (hi == 0) {
      eig.push_back(H[0][0]);
      break;
    }
    // Find the active block [lo, hi].
    int lo = hi;
    while (lo > 0) {
      Real s = abs(H[lo][lo]) + abs(H[lo - 1][lo - 1]);
      if (s.is_zero()) s = Real(1L, 64);
      if (abs(H[lo][lo - 1]) <= ldexp(s, tiny)) {
        H[lo][lo - 1] = Real(wp);
        break;
      }
      --lo;
    }
    if (lo == hi) {
      eig.push_back(H[hi][hi]);
      --hi;
      continue;
    }
    if (++iter > 60 * m) throw NonConvergence("Hessenberg QR did not converge");
    // Wilkinson shift from the trailing 2x2 block, real part if complex.
    const Real& p = H[hi - 1][hi - 1];
    const Real& q = H[hi - 1][hi];
    const Real& r = H[hi][hi - 1];
    const Real& s = H[hi][hi];
    Real tr = (p + s) / 2L, det = p * s - q * r;
    Real disc = tr * tr - det;
    Real mu = tr;
    if (disc.sign() >= 0) {
      Real root = sqrt(disc);
      Real e1 = tr + root, e2 = tr - root;
      mu = abs(e1 - s) < abs(e2 - s) ? e1 : e2;
    }
    // One explicit shifted QR step on the block via Givens rotations.
    for (int i = lo; i <= hi; ++i) H[i][i] -= mu;
    std::vector<std::pair<Real, Real>> rot;
    for (int k = lo; k < hi; ++k) {
      Real x = H[k][k], y = H[k + 1][k];
      Real nrm = sqrt(x * x + y * y);
      Real c = nrm.is_zero() ? Real(1L, wp) : x / nrm;
      Real sn = nrm.is_zero() ? Real(wp) : y / nrm;
      for (int j = k; j < m; ++j) {
        Real u = H[k][j], v = H[k + 1][j];
        H[k][j] = c * u + sn * v;
        H[k + 1][j] = c * v - sn * u;
      }
      rot.emplace_back(c, sn);
    }
    for (int k = lo; k < hi; ++k) {
      const auto& [c, sn] = rot[k - lo];
      for (int i = 0; i <= std::min(k + 2, hi); ++i) {
        Real u = H[i][k], v = H[i][k + 1];
        H[i][k] = c * u + sn * v;
        H[i][k + 1] = c * v - sn * u;
      }
    }
    for (int i = lo; i <= hi; ++i) H[i][i] += mu;
  }
  std::sort(eig.begin(), eig.end(), [](const Real& x, const Real& y) { return x < y; });
  auto zs = real_zeros_exact(m, prec);
  Real dev(64);
  for (int i = 0; i < m; ++i) dev = max(dev, abs(eig[i] - zs.zeros[i].value).with_precision(64));
  for (auto& e : eig) rep.eigenvalues.push_back(e.with_precision(prec));
  rep.max_deviation = dev;
  rep.iterations = iter;
  return rep;
}

std::string conjecture_report_json(const std::vector<PositivityReport>& reports) {
  nlohmann::json j;
  j["certified_max_n"] = kCertifiedPositivityMaxN;
  j["note"] = "n <= certified_max_n: Sturm-certified sign verdict on all of R; larger n: grid sampling only";
  nlohmann::json arr = nlohmann::json::array();
  int counterexamples = 0;
  for (const auto& rep : reports)
    for (const auto& s : rep.scans) {
      nlohmann::json e;
      e["poly"] = s.name;
      e["n"] = s.n;
      e["k"] = s.k;
      e["grid_min"] = format_rational(s.grid_min);
      e["grid_argmin"] = format_rational(s.grid_argmin);
      e["global_min"] = s.global_min;
      e["global_argmin"] = s.global_argmin;
      e["certified"] = s.certified;
      e["nonnegative"] = s.nonnegative;
      if (!s.nonnegative) {
        e["counterexample_x"] = format_rational(s.counterexample_x);
        ++counterexamples;
      }
      arr.push_back(e);
    }
  j["scans"] = arr;
  j["counterexamples"] = counterexamples;
  return j.dump(2);
}

}  // namespace bk2
