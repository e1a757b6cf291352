#include "bk2/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <nlohmann/json.hpp>

#include "bk2/asymptotics.hpp"
#include "bk2/conjecture.hpp"
#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/precision_eval.hpp"
#include "bk2/zeros.hpp"

namespace bk2 {

namespace {

using json = nlohmann::json;

std::string dec(const Real& x, int digits = 12) { return x.to_string(digits); }
std::string dec(double x) { return Real(x, 64).to_string(12); }

Real Qr(long a, long b, Bits p) { return Real(Rational(a, b), p); }

bool full(const VerifyOptions& o) { return o.profile == Profile::Full; }
bool mutated(const VerifyOptions& o, const char* name) { return o.mutate == name; }

Real fact(long n, Bits p) { return Real(factorial(n), p); }

// ---- 1: exact identities ---------------------------------------------------

VerificationRecord c1(const VerifyOptions& o) {
  VerificationRecord r;
  const int N = 40;
  long checks = 0, bad = 0;
  std::ostringstream detail;
  auto check = [&](bool ok, const char* what, int n) {
    ++checks;
    if (!ok) {
      if (bad < 8) detail << what << " fails at n=" << n << "; ";
      ++bad;
    }
  };
  auto rec = build_by_recursion(N);
  for (int n = 0; n <= N; ++n) {
    auto p = build_diagonal(n);
    check(rec[n] == p, "recursion vs integral construction", n);
    check(build_generalized(n, Rational(n)) == p, "generalized order n", n);
    // p(n - x) = (-1)^n p(x)
    check(p.reflect().shift(Rational(-n)) == p * Rational(n % 2 ? -1 : 1), "diagonal symmetry", n);
    for (int k = 0; k <= n; ++k) check(sgn(p(k)) * ((n + k) % 2 ? -1 : 1) > 0, "sign alternation", n);
  }
  for (int n = 1; n <= N; ++n) check(build_generalized(n - 1, Rational(n)) == falling_product(n - 1), "product formula", n);
  const std::vector<Rational> xs{Rational(0), Rational(1, 2), Rational(-1, 2), Rational(1), Rational(7, 3)};
  for (int n = 1; n <= N; ++n)
    for (int a : {0, 1, 2, n}) {
      auto fam = build_generalized_family(n, Rational(a));
      auto lower = build_generalized_family(n - 1, Rational(a - 1));
      const auto& p = fam[n];
      for (const auto& x : xs) check(p(x + 1) - p(x) == lower[n - 1](x) * n, "difference identity", n);
      check(p.derivative() == fam[n - 1] * Rational(n), "derivative identity", n);
      check(p.reflect() == p.shift(Rational(a)) * Rational(n % 2 ? -1 : 1), "reflection identity", n);
    }
  for (int n = 0; n < N; ++n) check(hessenberg_charpoly(n) == build_diagonal(n + 1), "Hessenberg charpoly", n);
  const std::vector<Rational> ys{Rational(1, 2), Rational(1), Rational(3)};
  for (int n = 1; n <= N; ++n)
    for (const auto& x : xs)
      for (const auto& y : ys) check(modulus_identity_check(n, x, y) == 0, "modulus identity", n);
  r.params = json{{"n_max", N}, {"checks", checks}}.dump();
  r.measured = std::to_string(bad);
  r.tolerance = "0";
  r.pass = bad == 0;
  detail << checks << " exact checks, " << bad << " nonzero residuals";
  r.detail = detail.str();
  (void)o;
  return r;
}

// ---- 2: zero localization --------------------------------------------------

VerificationRecord c2(const VerifyOptions& o) {
  VerificationRecord r;
  const int N = full(o) ? 60 : 40;
  long bad = 0;
  Real worst_sym(64);
  for (int n = 1; n <= N; ++n) {
    auto zs = real_zeros_exact(n, o.prec);
    if (static_cast<int>(zs.zeros.size()) != n) {
      ++bad;
      continue;
    }
    for (int i = 0; i < n; ++i) {
      const auto& z = zs.zeros[i];
      long k = i + 1;
      if (!(z.value > Real(k - 1, o.prec) && z.value < Real(k, o.prec))) ++bad;
      if (2 * k <= n && !(z.lo > Rational(2 * k - 1, 2) && z.hi < Rational(k))) ++bad;
      if (2 * k > n + 1 && !(z.lo > Rational(k - 1) && z.hi < Rational(2 * k - 1, 2))) ++bad;
      const auto& m = zs.zeros[n - 1 - i];
      Real sym = abs(z.value + m.value - Real(n, o.prec));
      Real allow = 2L * max(z.error_radius, m.error_radius) + ldexp(Real(n, 64), -static_cast<long>(o.prec));
      if (sym > allow) ++bad;
      if (!allow.is_zero()) worst_sym = max(worst_sym, (sym / allow).with_precision(64));
    }
    if (n % 2 && zs.zeros[n / 2].value != Real(Rational(n, 2), o.prec)) ++bad;
  }
  r.params = json{{"n_max", N}}.dump();
  r.measured = std::to_string(bad);
  r.tolerance = "0";
  r.pass = bad == 0;
  r.detail = "violations of interlacing, half-interval, symmetry or exact middle zero; worst symmetry/(2 err) = " +
             dec(worst_sym, 4);
  return r;
}

// ---- 3: complete expansion -------------------------------------------------

VerificationRecord c3(const VerifyOptions& o) {
  VerificationRecord r;
  const Bits p = o.prec;
  std::vector<long> ns{1000, 10000};
  if (full(o)) ns = {1000, 10000, 100000, 1000000};
  const std::vector<std::pair<Real, const char*>> zs{{Qr(1, 2, p), "1/2"}, {Real(1L, p), "1"}, {Real(2L, p), "2"}};
  Real worst(64);
  std::ostringstream detail;
  for (const auto& [zr, zname] : zs) {
    Complex z(zr);
    // Diagnostic only: the tail sum_{j=4..8} c_j/L^(j-4) the residual should track.
    auto tail_c = c_k_all(8, z, p);
    for (long n : ns) {
      auto ce = complete_expansion_eval(n, z, 3, p);
      Real L = log(Real(n, p));
      Real L5 = pow(L, 5);
      Real c4 = ce.next_term * L5;
      auto iv = eval_integral_rep(n, z, p);
      Real truth = iv.value.value.re() * pow(Real(n, p), zr);
      Real resid = (truth - ce.approx.re()) * L5;
      Real ratio = abs(resid) / c4;
      Real dev = max(ratio, Real(1L, 64) / ratio).with_precision(64);
      worst = max(worst, dev);
      Real tail(p);
      for (int j = 8; j >= 4; --j) tail = tail / L + tail_c[j].value.re();
      detail << "z=" << zname << " n=" << n << ": resid*L^5=" << dec(resid, 5) << " |c4|=" << dec(c4, 5)
             << " tail=" << dec(tail, 5) << "; ";
    }
  }
  r.params = json{{"z", {"1/2", "1", "2"}}, {"n", ns}, {"K", 3}}.dump();
  r.measured = dec(worst);
  r.tolerance = "2";
  r.pass = worst <= 2L;
  r.detail = detail.str();
  return r;
}

// ---- 4: small zeros --------------------------------------------------------

VerificationRecord c4(const VerifyOptions& o) {
  VerificationRecord r;
  const Bits p = o.prec;
  const long n = 1000000;
  Real worst(64);
  std::ostringstream detail;
  for (int k : {1, 2}) {
    auto s = small_zero_expansion(k, 3, p);
    Real e3 = s.coeffs[2];
    if (k == 1) {
      Real g = const_euler(p), pi2 = const_pi(p) * const_pi(p);
      e3 = g * g - pi2 / 6L;  // closed form for k = 1
    }
    if (mutated(o, "small-zero")) e3 *= 2L;
    auto z = real_zero_large_n(n, k, p);
    Real L = log(Real(n, p));
    Real resid = (z.value - s.evaluate(Real(n, p), 2)) * pow(L, 3);
    Real dev = abs(abs(resid) / abs(e3) - 1L).with_precision(64);
    worst = max(worst, dev);
    detail << "k=" << k << ": resid*L^3=" << dec(resid, 6) << " |e3|=" << dec(abs(e3), 6) << "; ";
  }
  r.params = json{{"n", n}, {"k", {1, 2}}, {"truncation_order", 2}}.dump();
  r.measured = dec(worst);
  r.tolerance = "0.25";
  r.pass = worst <= Real(0.25, 64);
  r.detail = detail.str() + "measured = max | |resid*L^3|/|e3| - 1 |";
  return r;
}

// ---- 5: middle zeros -------------------------------------------------------

VerificationRecord c5(const VerifyOptions& o) {
  VerificationRecord r;
  const Bits p = o.prec;
  Real pi = const_pi(p), p2 = pi * pi, p4 = p2 * p2, p6 = p4 * p2;
  Real even_ref = (3L * p4 - 100L * p2 + 720L) / (12L * p6);
  Real odd_ref = -(3L * p4 - 40L * p2 + 720L) / (6L * p6);
  if (mutated(o, "middle-zero")) even_ref *= 2L;
  Real worst(64);
  std::ostringstream detail;
  for (long n : {200L, 400L, 800L}) {
    Real nn(n, p);
    Real n3 = nn * nn * nn;
    auto ze = real_zero_large_n(2 * n, n, p);
    Real ae = nn - Qr(1, 2, p) + 1L / (p2 * nn) + (p2 - 12L) / (2L * p4 * nn * nn);
    Real re = (ze.value - ae) * n3 / even_ref;
    auto zo = real_zero_large_n(2 * n + 1, n + 2, p);
    Real ao = nn + Qr(3, 2, p) - 2L / (p2 * nn) + 12L / (p4 * nn * nn);
    Real ro = (zo.value - ao) * n3 / odd_ref;
    worst = max(worst, max(abs(re - 1L), abs(ro - 1L)).with_precision(64));
    detail << "n=" << n << ": even ratio " << dec(re, 6) << ", odd ratio " << dec(ro, 6) << "; ";
  }
  r.params = json{{"n", {200, 400, 800}}, {"even", "x_n^(2n)"}, {"odd", "x_{n+2}^(2n+1)"}}.dump();
  r.measured = dec(worst);
  r.tolerance = "0.25";
  r.pass = worst <= Real(0.25, 64);
  r.detail = detail.str() + "measured = max |resid*n^3/coefficient - 1|";
  return r;
}

// ---- 6: alpha regime -------------------------------------------------------

VerificationRecord c6(const VerifyOptions& o) {
  VerificationRecord r;
  const Bits p = o.prec;
  Real alpha = Qr(1, 3, p);
  Complex z(Qr(1, 5, p));
  std::vector<double> errs;
  std::ostringstream detail;
  for (long n : {600L, 1200L, 2400L}) {
    Complex arg = z + Complex(alpha * n);
    auto iv = eval_integral_rep(n, arg, p);
    Real norm = exp(alpha * n * log(alpha) + (1L - alpha) * n * log(1L - alpha));
    Real lhs = iv.value.value.re() * sqrt(Real(n, p)) / norm;
    Complex lead = alpha_leading(n, z, alpha, p);
    Real e = abs((lhs - lead.re()) / lead.re()) * n;
    errs.push_back(e.to_double());
    detail << "n=" << n << ": err*n=" << dec(e, 6) << "; ";
  }
  double growth = std::max(errs[1] / errs[0], errs[2] / errs[1]);
  const long n = 3000;
  auto zk = real_zero_large_n(n, n / 3, p);
  Real gap = abs(zk.value - Real(n / 3, p) - alpha_zero_limit(alpha, 0, p));
  detail << "limit gap at n=3000: " << dec(gap, 6) << " (tolerance 0.02)";
  r.params = json{{"alpha", "1/3"}, {"z", "1/5"}, {"n", {600, 1200, 2400}}, {"gap_n", n}}.dump();
  r.measured = dec(growth);
  r.tolerance = "1.10";
  r.pass = growth <= 1.10 && gap < Real(0.02, 64);
  r.detail = detail.str() + "; measured = max err*n growth over doublings";
  return r;
}

// ---- 7: non-oscillatory regime ---------------------------------------------

double nonosc_rel_err(long n, const Rational& re, const Rational& im, Bits p) {
  auto poly = build_diagonal(static_cast<int>(n));
  auto [a, b] = eval_exact_complex(poly, re * n, im * n);
  Real f = fact(n, p);
  Complex exact(Real(a, p) / f, Real(b, p) / f);
  Complex approx = nonosc_leading(n, Complex(Real(re, p), Real(im, p)), p);
  return abs(approx / exact - Complex(Real(1L, p))).to_double();
}

VerificationRecord c7(const VerifyOptions& o) {
  VerificationRecord r;
  std::vector<long> ns{40, 80, 160};
  if (full(o)) ns.push_back(320);
  double worst = 0;
  std::ostringstream detail;
  const std::vector<std::pair<std::pair<Rational, Rational>, const char*>> zs{
      {{Rational(-1), Rational(0)}, "-1"}, {{Rational(2), Rational(0)}, "2"}, {{Rational(1, 2), Rational(1)}, "1/2+i"}};
  for (const auto& [zz, name] : zs) {
    double prev = 0;
    detail << "z=" << name << ":";
    for (long n : ns) {
      double e = nonosc_rel_err(n, zz.first, zz.second, o.prec) * n;
      detail << ' ' << dec(e);
      if (prev > 0) worst = std::max(worst, e / prev);
      prev = e;
    }
    detail << "; ";
  }
  double loop = 0;
  for (int j = 0; j < 8; ++j) {
    double th = 2 * M_PI * j / 8;
    Rational re(static_cast<long>(std::lround(1000 * (0.5 + std::cos(th)))), 1000);
    Rational im(static_cast<long>(std::lround(1000 * std::sin(th))), 1000);
    re.canonicalize();
    im.canonicalize();
    loop = std::max(loop, nonosc_rel_err(60, re, im, o.prec));
  }
  detail << "loop |z-1/2|=1 at n=60: max rel err " << dec(loop) << " (tolerance 0.05)";
  r.params = json{{"z", {"-1", "2", "1/2+i"}}, {"n", ns}, {"loop_n", 60}}.dump();
  r.measured = dec(worst);
  r.tolerance = "1.25";
  r.pass = worst <= 1.25 && loop < 0.05;
  r.detail = detail.str() + "; measured = max rel err*n growth over doublings";
  return r;
}

// ---- 8: p/q closed forms, D-numbers, Gauss-Encke -----------------------------

VerificationRecord c8(const VerifyOptions& o) {
  VerificationRecord r;
  const Bits p = 128;  // the closed forms are pinned at 128 bits
  Real pi = const_pi(p), p2 = pi * pi, s2 = sqrt(Real(2L, p));
  auto P0 = p_poly(0, p), P1 = p_poly(1, p), P2 = p_poly(2, p);
  auto Q0 = q_poly(0, p), Q1 = q_poly(1, p), Q2 = q_poly(2, p);
  Real f1 = 2L * s2 / (p2 * p2), f2 = 2L * s2 / (p2 * p2 * p2);
  Real g1 = 16L * s2 / (p2 * p2), g2 = 16L * s2 / (3L * p2 * p2 * p2);
  Real p1c0 = f1 * (p2 - 16L);
  if (mutated(o, "p-q")) p1c0 *= Real(1L, p) + ldexp(Real(1L, p), -60);
  std::vector<std::pair<Real, Real>> pairs{
      {P0[0], 2L * s2 / p2},
      {P1[2], f1 * 8L * p2},
      {P1[0], p1c0},
      {P2[4], f2 * 64L * p2 * p2},
      {P2[2], f2 * 16L * (5L * p2 - 48L) * p2},
      {P2[0], f2 * (p2 * p2 - 160L * p2 + 1536L)},
      {Q0[1], 16L * s2 / p2},
      {Q1[3], g1 * 8L * p2},
      {Q1[1], g1 * (5L * p2 - 48L)},
      {Q2[5], g2 * 192L * p2 * p2},
      {Q2[3], g2 * 80L * (7L * p2 - 48L) * p2},
      {Q2[1], g2 * (91L * p2 * p2 - 3360L * p2 + 23040L)},
  };
  Real pq(64);
  for (const auto& [a, b] : pairs) pq = max(pq, abs(a - b).with_precision(64));
  bool odd_vanish = P1[1].is_zero() && Q2[0].is_zero();

  // Three-term series against exact values; error / (|a_3|/n^3) <= 3.
  Real sp = sqrt(pi);
  Real d0 = 2L * s2 / pow(sp, 3), d1 = (p2 - 16L) / (2L * s2 * pow(sp, 7)),
       d2 = (p2 * p2 - 160L * p2 + 1536L) / (32L * s2 * pow(sp, 11));
  Real k1 = (7L * p2 - 48L) / (8L * p2), k2 = 3L * (27L * p2 * p2 - 480L * p2 + 2560L) / (128L * p2 * p2);
  if (mutated(o, "gauss-encke")) k2 *= 2L;
  Real d3 = dnumber_expansion(4, p).coeffs[2];
  Real k3 = gauss_encke_expansion(4, p).coeffs[2];
  double worst_ratio = 0;
  int worst_n = 0;
  std::string worst_what;
  for (int n = 1; n <= 30; ++n) {
    auto poly = build_diagonal(2 * n);
    Real nn(n, p);
    Real fac = fact(2 * n, p);
    Real D = Real(poly(Rational(n)), p) * ldexp(Real(1L, p), 2 * n);
    Real dl = D * sqrt(Real(2 * n, p)) / fac * (n % 2 ? -1L : 1L);
    Real dser = d0 + d1 / nn + d2 / (nn * nn);
    Real K = Real(poly(Rational(2 * n - 1, 2)), p) / fac;
    Real kl = K * ((n + 1) % 2 ? -1L : 1L) * ldexp(Real(1L, p), 2 * n - 1) * pow(sp, 5) * pow(sqrt(nn), 3);
    Real kser = 1L + k1 / nn + k2 / (nn * nn);
    Real n3 = nn * nn * nn;
    double rd = (abs(dl - dser) / (abs(d3) / n3)).to_double();
    double rk = (abs(kl - kser) / (abs(k3) / n3)).to_double();
    if (rd > worst_ratio) worst_ratio = rd, worst_n = n, worst_what = "D-number";
    if (rk > worst_ratio) worst_ratio = rk, worst_n = n, worst_what = "Gauss-Encke";
  }
  std::ostringstream detail;
  detail << "p/q max deviation " << dec(pq, 4) << " (tolerance 1e-25); worst series ratio " << dec(worst_ratio) << " ("
         << worst_what << ", n=" << worst_n << ", tolerance 3)";
  r.params = json{{"pq_prec_bits", p}, {"series_n", "1..30"}, {"terms", 3}}.dump();
  r.measured = dec(worst_ratio);
  r.tolerance = "3";
  r.pass = pq <= Real(1e-25, 64) && odd_vanish && worst_ratio <= 3.0;
  r.detail = detail.str();
  return r;
}

// ---- 9: measure convergence ------------------------------------------------

VerificationRecord c9(const VerifyOptions& o) {
  VerificationRecord r;
  long bad = 0;
  Real worst_ks(64), worst_c(64);
  std::vector<int> ns;
  for (int n = 1; n <= (full(o) ? 60 : 40); ++n) ns.push_back(n);
  for (int n : {100, 200}) ns.push_back(n);
  for (int n : ns) {
    auto m = measure_stats(real_zeros_exact(n, o.prec));
    Real ksn = (m.ks_distance * Real(n, 64)).with_precision(64);
    worst_ks = max(worst_ks, ksn);
    if (m.ks_distance > Real(1L, 64) / Real(n, 64)) ++bad;
    if (n == 50 || n == 100 || n == 200) {
      Complex c = m.cauchy_transform(Complex(Real(2L, o.prec)));
      Real dn = (abs(c.re() - const_log2(o.prec)) * Real(n, 64) / 5L).with_precision(64);
      worst_c = max(worst_c, dn);
      if (dn > 1L || abs(c.im()) > Real(1e-30, 64)) ++bad;
    }
  }
  r.params = json{{"ks_n", "1..N plus 100, 200"}, {"cauchy_n", {50, 100, 200}}}.dump();
  r.measured = dec(max(worst_ks, worst_c));
  r.tolerance = "1";
  r.pass = bad == 0;
  r.detail = "max n*KS = " + dec(worst_ks, 6) + ", max n*|C(2) - log 2|/5 = " + dec(worst_c, 6);
  return r;
}

// ---- 10: attractor ---------------------------------------------------------

std::string cloud_csv(const AttractorCloud& cloud) {
  auto path = std::filesystem::temp_directory_path() / ("bk2_verify_" + std::to_string(::getpid()) + ".csv");
  write_attractor_csv(path.string(), {cloud});
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  std::filesystem::remove(path);
  return ss.str();
}

VerificationRecord c10(const VerifyOptions& o) {
  VerificationRecord r;
  const int n = 200;
  long bad = 0;
  auto real_roots = complex_zeros(attractor_polynomial(n, Rational(1)), o.prec, o.seed);
  for (const auto& z : real_roots) {
    if (abs(z.value.im()) > z.error_bound) ++bad;
    if (!(z.value.re() > Real(0L, 64) && z.value.re() < Real(1L, 64))) ++bad;
  }
  auto run0 = [&] {
    AttractorCloud c{Rational(0), n, complex_zeros(attractor_polynomial(n, Rational(0)), o.prec, o.seed)};
    std::sort(c.roots.begin(), c.roots.end(), [](const auto& a, const auto& b) {
      if (a.value.re() != b.value.re()) return a.value.re() < b.value.re();
      return a.value.im() < b.value.im();
    });
    return c;
  };
  auto first = run0();
  Real max_im(64);
  long unpaired = 0;
  for (const auto& a : first.roots) {
    max_im = max(max_im, abs(a.value.im()).with_precision(64));
    bool found = std::any_of(first.roots.begin(), first.roots.end(), [&](const auto& b) {
      return abs(b.value - conj(a.value)) <= a.error_bound + b.error_bound;
    });
    if (!found) ++unpaired;
  }
  bool stable = cloud_csv(first) == cloud_csv(run0());
  bool shape = max_im > Real(0.05, 64);
  r.params = json{{"n", n}, {"lambda", {"1", "0"}}, {"seed", o.seed}}.dump();
  r.measured = dec(max_im);
  r.tolerance = "0.05";
  r.pass = bad == 0 && unpaired == 0 && stable && shape;
  r.detail = "lambda=1 violations " + std::to_string(bad) + "; lambda=0 max|Im| " + dec(max_im, 6) + ", unpaired " +
             std::to_string(unpaired) + ", csv stable " + (stable ? "yes" : "no");
  return r;
}

VerificationRecord timed(const Criterion& c, const VerifyOptions& o) {
  auto t0 = std::chrono::steady_clock::now();
  VerificationRecord r = c.run(o);
  r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  r.claim_id = c.id;
  r.title = c.title;
  return r;
}

}  // namespace

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> list{
      {"C01", "exact identity suite, n <= 40", c1},
      {"C02", "zero localization, n <= 60", c2},
      {"C03", "complete log-expansion residual, K = 3", c3},
      {"C04", "small-zero expansion at n = 10^6", c4},
      {"C05", "middle-zero expansion, n = 200..800", c5},
      {"C06", "alpha regime at alpha = 1/3", c6},
      {"C07", "non-oscillatory regime", c7},
      {"C08", "p/q closed forms, D-number and Gauss-Encke series", c8},
      {"C09", "zero-counting measure", c9},
      {"C10", "attractor clouds at n = 200", c10},
  };
  return list;
}

const std::vector<std::string>& mutation_names() {
  static const std::vector<std::string> names{"small-zero", "middle-zero", "gauss-encke", "p-q"};
  return names;
}

std::vector<VerificationRecord> run_verify(const VerifyOptions& opts,
                                           const std::function<void(const VerificationRecord&)>& on_done) {
  if (!opts.mutate.empty() &&
      std::find(mutation_names().begin(), mutation_names().end(), opts.mutate) == mutation_names().end())
    throw DomainError("unknown mutation: " + opts.mutate);
  std::vector<VerificationRecord> out;
  for (const auto& c : criteria()) {
    out.push_back(timed(c, opts));
    if (on_done) on_done(out.back());
  }
  return out;
}

std::string profile_name(Profile p) { return p == Profile::Quick ? "quick" : "full"; }

std::string verify_report_json(const std::vector<VerificationRecord>& recs, const VerifyOptions& opts,
                               bool include_timing) {
  json j;
  j["profile"] = profile_name(opts.profile);
  j["prec_bits"] = opts.prec;
  j["seed"] = opts.seed;
  if (!opts.mutate.empty()) j["mutate"] = opts.mutate;
  json arr = json::array();
  int failures = 0;
  for (const auto& r : recs) {
    json e{{"claim_id", r.claim_id}, {"title", r.title},         {"params", json::parse(r.params)},
           {"measured", r.measured}, {"tolerance", r.tolerance}, {"pass", r.pass},
           {"detail", r.detail}};
    if (include_timing) e["runtime_ms"] = std::llround(r.runtime_ms);
    arr.push_back(e);
    failures += r.pass ? 0 : 1;
  }
  j["records"] = arr;
  j["failures"] = failures;
  return j.dump(2);
}

std::string verify_table(const std::vector<VerificationRecord>& recs) {
  std::ostringstream s;
  char line[256];
  std::snprintf(line, sizeof line, "%-4s %-4s %-52s %-14s %-6s %9s\n", "id", "ok", "claim", "measured", "tol", "ms");
  s << line;
  for (const auto& r : recs) {
    std::snprintf(line, sizeof line, "%-4s %-4s %-52s %-14s %-6s %9.0f\n", r.claim_id.c_str(), r.pass ? "PASS" : "FAIL",
                  r.title.c_str(), r.measured.substr(0, 14).c_str(), r.tolerance.c_str(), r.runtime_ms);
    s << line;
  }
  return s.str();
}

}  // namespace bk2
