// bk2 command-line front end.
//
// Exit codes: 0 ok, 1 usage, 2 domain error, 3 precision exhausted or no
// convergence, 3 + f when verify sees f > 0 failing criteria.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <nlohmann/json.hpp>

#include "bk2/asymptotics.hpp"
#include "bk2/conjecture.hpp"
#include "bk2/errors.hpp"
#include "bk2/exact_core.hpp"
#include "bk2/level_curves.hpp"
#include "bk2/precision_eval.hpp"
#include "bk2/verify.hpp"
#include "bk2/zeros.hpp"

using namespace bk2;
using json = nlohmann::json;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitDomain = 2;
constexpr int kExitPrecision = 3;

// ---- configuration ---------------------------------------------------------

struct Settings {
  Bits prec = 128;
  int digits = 30;
  std::uint64_t seed = 0x5eed;
};

// key = value lines; '#' starts a comment; values may be quoted.
std::map<std::string, std::string> read_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot open config file " + path);
  std::map<std::string, std::string> kv;
  std::string line;
  auto trim = [](std::string s) {
    const char* ws = " \t\r";
    s.erase(0, s.find_first_not_of(ws));
    s.erase(s.find_last_not_of(ws) + 1);
    if (s.size() >= 2 && (s.front() == '"' || s.front() == '\'') && s.back() == s.front()) s = s.substr(1, s.size() - 2);
    return s;
  };
  while (std::getline(f, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!trim(line).empty()) throw DomainError("malformed config line: " + line);
      continue;
    }
    kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
  }
  return kv;
}

// ---- numbers ---------------------------------------------------------------

// Exact rational from "p/q", an integer, or a decimal with optional exponent.
Rational parse_exact(const std::string& text) {
  if (text.find_first_of(".eE") == std::string::npos) return parse_rational(text);
  std::string s = text;
  int sign = 1;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    sign = s[0] == '-' ? -1 : 1;
    s = s.substr(1);
  }
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    exp10 = std::stol(s.substr(e + 1));
    s = s.substr(0, e);
  }
  std::string digits = s;
  if (auto dot = s.find('.'); dot != std::string::npos) {
    digits = s.substr(0, dot) + s.substr(dot + 1);
    exp10 -= static_cast<long>(s.size() - dot - 1);
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("malformed number: " + text);
  Rational q(mpz_class(digits), 1);
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(std::labs(exp10)));
  q = exp10 >= 0 ? Rational(q * p10) : Rational(q / p10);
  q.canonicalize();
  return sign < 0 ? Rational(-q) : q;
}

std::string fmt(const Real& x, int digits) { return x.to_string(digits); }
std::string fmt(const Complex& z, int digits) {
  if (z.im().is_zero()) return fmt(z.re(), digits);
  std::string im = fmt(abs(z.im()), digits);
  return fmt(z.re(), digits) + (z.im().sign() < 0 ? " - " : " + ") + im + "i";
}
std::string fmt_q(const Rational& re, const Rational& im) {
  if (im == 0) return format_rational(re);
  return format_rational(re) + (im < 0 ? " - " : " + ") + format_rational(abs(im)) + "i";
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  f << text;
}

// ---- eval ------------------------------------------------------------------

struct EvalArgs {
  long n = 0;
  std::string z = "0", im = "0", method = "exact", alpha;
  int order = 3;
  bool json_out = false;
};

int cmd_eval(const EvalArgs& a, const Settings& s) {
  const Rational zr = parse_exact(a.z), zi = parse_exact(a.im);
  const Bits p = s.prec;
  Complex z(Real(zr, p), Real(zi, p));
  json j{{"n", a.n}, {"z", fmt_q(zr, zi)}, {"method", a.method}, {"prec_bits", p}};
  std::string printed;
  auto put_scaled = [&](const Complex& v, const Real& err) {
    j["quantity"] = "S_n(z) = (-1)^n B_n^(n)(z)/n!";
    j["value"] = fmt(v, s.digits);
    j["error_bound"] = fmt(err, 6);
    printed = fmt(v, s.digits);
  };
  if (a.n < 0) throw DomainError("n must be >= 0");
  if (a.method == "exact") {
    if (a.n > kMaxExactDegree) throw DomainError("exact evaluation needs n <= 512");
    auto [re, im] = eval_exact_complex(build_diagonal(static_cast<int>(a.n)), zr, zi);
    j["quantity"] = "B_n^(n)(z)";
    j["value"] = fmt_q(re, im);
    j["error_bound"] = "0";
    printed = fmt_q(re, im);
  } else if (a.method == "integral") {
    auto v = eval_integral_rep(a.n, z, p);
    put_scaled(v.value.value, v.value.error_bound);
    j["near_zero"] = v.value.near_zero;
  } else if (a.method == "middle") {
    Complex w = z - Complex(Real(Rational(a.n, 2), p));
    auto v = eval_middle(a.n, w, p);
    put_scaled(v.value / Complex(const_pi(p)), v.error_bound / const_pi(p));
  } else if (a.method.rfind("asymptotic:", 0) == 0) {
    const std::string regime = a.method.substr(11);
    Real nn(a.n, p);
    j["asymptotic"] = true;
    if (regime == "nonosc") {
      if (a.n < 1) throw DomainError("n must be >= 1");
      Complex u = z / Complex(nn);
      Complex v = nonosc_leading(a.n, u, p);
      j["quantity"] = "B_n^(n)(z)/n!";
      j["value"] = fmt(v, s.digits);
      printed = fmt(v, s.digits);
      if (a.n <= kMaxExactDegree) {
        auto [re, im] = eval_exact_complex(build_diagonal(static_cast<int>(a.n)), zr, zi);
        Real f(factorial(a.n), p);
        Complex ex(Real(re, p) / f, Real(im, p) / f);
        Real rel = abs(v / ex - Complex(Real(1L, p)));
        j["relative_error_vs_exact"] = fmt(rel, 6);
        printed += "  (relative error vs exact " + fmt(rel, 6) + ")";
      }
    } else if (regime == "complete") {
      auto ce = complete_expansion_eval(a.n, z, a.order, p);
      Complex nz = exp(z * Complex(log(nn)));
      put_scaled(ce.approx / nz, ce.next_term / abs(nz));
      j["truncation_order"] = a.order;
    } else if (regime == "alpha") {
      if (a.alpha.empty()) throw std::invalid_argument("asymptotic:alpha needs --alpha");
      Real alpha(parse_exact(a.alpha), p);
      Complex w = z - Complex(alpha * nn);
      Complex lead = alpha_leading(a.n, w, alpha, p);
      Real norm = exp(alpha * nn * log(alpha) + (1L - alpha) * nn * log(1L - alpha));
      Complex v = lead * Complex(norm / sqrt(nn));
      if (zi == 0) v = Complex(v.re());
      put_scaled(v, Real(64));
      j["error_bound"] = "O(1/n) relative";
    } else if (regime == "middle") {
      Complex w = z - Complex(Real(Rational(a.n, 2), p));
      Complex v = middle_expansion_eval(a.n, w, a.order, p);
      put_scaled(v / Complex(ldexp(sqrt(nn), a.n)), Real(64));
      j["error_bound"] = "O(n^-" + std::to_string(a.order + 1) + ") absolute on 2^n sqrt(n) S_n";
      j["truncation_order"] = a.order;
    } else {
      throw std::invalid_argument("unknown asymptotic regime: " + regime + " (complete, alpha, middle, nonosc)");
    }
  } else {
    throw std::invalid_argument("unknown method: " + a.method);
  }
  std::cout << (a.json_out ? j.dump(2) : printed) << '\n';
  return 0;
}

// ---- zeros -----------------------------------------------------------------

int cmd_zeros(long n, std::optional<long> k, const std::string& out, const Settings& s) {
  if (n < 0) throw DomainError("n must be >= 0");
  ZeroSet set{n, {}};
  if (k) {
    set.zeros.push_back(n <= kMaxExactDegree ? real_zeros_exact(static_cast<int>(n), s.prec).zeros.at(*k - 1)
                                             : real_zero_large_n(n, *k, s.prec));
  } else if (n <= kMaxExactDegree) {
    set = real_zeros_exact(static_cast<int>(n), s.prec);
  } else {
    throw DomainError("n > 512 needs --k");
  }
  write_zeros_csv(out, {set});
  std::cerr << set.zeros.size() << " zero(s) written to " << out << '\n';
  return 0;
}

// ---- expand ----------------------------------------------------------------

int cmd_expand(const std::string& target, int k, const std::string& parity, int order, const std::string& out,
               const Settings& s) {
  AsymptoticSeries ser;
  if (target == "small-zero") ser = small_zero_expansion(k, order, s.prec);
  else if (target == "large-zero") ser = large_zero_expansion(k, order, s.prec);
  else if (target == "middle-zero") {
    if (parity != "even" && parity != "odd") throw std::invalid_argument("--parity must be even or odd");
    ser = middle_zero_expansion(k, parity == "even" ? Parity::Even : Parity::Odd, order, s.prec);
  } else if (target == "dnumber") ser = dnumber_expansion(order, s.prec);
  else if (target == "gauss-encke") ser = gauss_encke_expansion(order, s.prec);
  else throw std::invalid_argument("unknown target: " + target);
  write_text(out, ser.to_json() + "\n");
  return 0;
}

// ---- attractor -------------------------------------------------------------

int cmd_attractor(int n, const std::string& lambdas, const std::string& out, const Settings& s) {
  if (n < 1 || n > kMaxExactDegree) throw DomainError("attractor needs 1 <= n <= 512");
  std::vector<AttractorCloud> clouds;
  std::stringstream ss(lambdas);
  for (std::string tok; std::getline(ss, tok, ',');) {
    Rational lam = parse_exact(tok);
    AttractorCloud c{lam, n, complex_zeros(attractor_polynomial(n, lam), s.prec, s.seed)};
    std::sort(c.roots.begin(), c.roots.end(), [](const auto& a, const auto& b) {
      if (a.value.re() != b.value.re()) return a.value.re() < b.value.re();
      return a.value.im() < b.value.im();
    });
    clouds.push_back(std::move(c));
  }
  write_attractor_csv(out, clouds);
  std::cerr << clouds.size() << " cloud(s) written to " << out << '\n';
  return 0;
}

// ---- levelcurves -----------------------------------------------------------

int cmd_levelcurves(const std::string& zre, const std::string& zim, const std::string& window, int grid,
                    const std::string& out, const Settings& s) {
  LevelWindow w;
  if (!window.empty()) {
    std::vector<double> v;
    std::stringstream ss(window);
    for (std::string tok; std::getline(ss, tok, ',');) v.push_back(std::stod(tok));
    if (v.size() != 4) throw std::invalid_argument("--window wants re_min,re_max,im_min,im_max");
    w = {v[0], v[1], v[2], v[3]};
  }
  Complex z(Real(parse_exact(zre), s.prec), Real(parse_exact(zim), s.prec));
  auto set = level_curves(z, w, grid, s.prec);
  write_levelcurve_csv(out, set);
  std::cerr << set.points.size() << " point(s) written to " << out << "; saddle " << fmt(set.xi0, 12) << '\n';
  return 0;
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const std::string& profile, const std::string& out, const std::string& mutate, bool timing,
               const Settings& s) {
  VerifyOptions o;
  if (profile == "quick") o.profile = Profile::Quick;
  else if (profile == "full") o.profile = Profile::Full;
  else throw std::invalid_argument("--profile must be quick or full");
  o.prec = s.prec;
  o.seed = s.seed;
  o.mutate = mutate;
  auto recs = run_verify(o, [](const VerificationRecord& r) {
    std::cerr << r.claim_id << ' ' << (r.pass ? "PASS" : "FAIL") << ' ' << r.detail << '\n';
  });
  std::cout << verify_table(recs);
  if (!out.empty()) write_text(out, verify_report_json(recs, o, timing) + "\n");
  long failures = std::count_if(recs.begin(), recs.end(), [](const auto& r) { return !r.pass; });
  return failures == 0 ? 0 : static_cast<int>(std::min<long>(3 + failures, 125));
}

// ---- report ----------------------------------------------------------------

std::string today() {
  std::time_t t = std::time(nullptr);
  char buf[16];
  std::strftime(buf, sizeof buf, "%Y-%m-%d", std::gmtime(&t));
  return buf;
}

int cmd_report(const std::string& kind, int nmax, const std::string& out, const Settings& s) {
  if (kind == "conjecture") {
    std::vector<Rational> grid;
    for (int i = -20; i <= 4 * (nmax + 5); ++i) grid.emplace_back(i, 4);
    for (auto& q : grid) q.canonicalize();
    std::vector<PositivityReport> reps;
    for (int n = 1; n <= nmax; ++n)
      for (int k = 0; 2 * k <= n; ++k) reps.push_back(positivity_scan(n, k, grid));
    std::string text = conjecture_report_json(reps);
    write_text(out, text + "\n");
    auto j = json::parse(text);
    if (j["counterexamples"].get<int>() > 0) {
      std::string path = "counterexample_" + today() + ".json";
      write_text(path, text + "\n");
      std::cerr << "negative value found; artifact written to " << path << '\n';
    }
    return 0;
  }
  if (kind == "hessenberg") {
    json arr = json::array();
    for (int n = 0; n <= nmax; ++n) {
      auto r = hessenberg_eigen_check(n, s.prec);
      arr.push_back({{"n", n},
                     {"charpoly_exact", n <= 60 ? json(hessenberg_charpoly(n) == build_diagonal(n + 1)) : json(nullptr)},
                     {"max_eigen_deviation", fmt(r.max_deviation, 6)},
                     {"qr_iterations", r.iterations}});
    }
    write_text(out, json{{"prec_bits", s.prec}, {"checks", arr}}.dump(2) + "\n");
    return 0;
  }
  throw std::invalid_argument("unknown report kind: " + kind + " (conjecture, hessenberg)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bk2: diagonal generalized Bernoulli polynomials, their zeros and asymptotics"};
  app.require_subcommand(1);
  std::optional<long> prec_flag;
  std::optional<int> digits_flag;
  std::optional<std::uint64_t> seed_flag;
  std::string config;
  app.add_option("--prec", prec_flag, "working precision in bits");
  app.add_option("--digits", digits_flag, "significant digits in printed decimals");
  app.add_option("--seed", seed_flag, "seed for randomized starting configurations");
  app.add_option("--config", config, "key = value file (prec, digits, seed)");

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "evaluate B_n^(n) or its scaled form");
  eval->add_option("--n", ea.n, "degree")->required();
  eval->add_option("--z", ea.z, "real part of z (rational or decimal)");
  eval->add_option("--im", ea.im, "imaginary part of z");
  eval->add_option("--method", ea.method, "exact | integral | middle | asymptotic:{complete,alpha,middle,nonosc}");
  eval->add_option("--alpha", ea.alpha, "alpha for asymptotic:alpha");
  eval->add_option("--order", ea.order, "truncation order for asymptotic:{complete,middle}");
  eval->add_flag("--json", ea.json_out, "print a JSON record");

  long zn = 0;
  std::optional<long> zk;
  std::string zout = "zeros.csv";
  auto* zeros = app.add_subcommand("zeros", "certified real zeros as CSV");
  zeros->add_option("--n", zn, "degree")->required();
  zeros->add_option("--k", zk, "only the k-th zero");
  zeros->add_option("--out", zout, "output CSV");

  std::string target, parity = "even", eout = "-";
  int ek = 1, eorder = 4;
  auto* expand = app.add_subcommand("expand", "asymptotic series as JSON");
  expand->add_option("--target", target, "small-zero | large-zero | middle-zero | dnumber | gauss-encke")->required();
  expand->add_option("--k", ek, "zero index (middle-zero: offset from the center)");
  expand->add_option("--parity", parity, "even | odd (middle-zero)");
  expand->add_option("--order", eorder, "number of gauge terms");
  expand->add_option("--out", eout, "output file, - for stdout");

  int an = 200;
  std::string lambdas = "0,1/4,1/2,3/4,1", aout = "attractor.csv";
  auto* attr = app.add_subcommand("attractor", "zero clouds of z -> B_n^(1-l+ln)(nz)");
  attr->add_option("--n", an, "degree");
  attr->add_option("--lambdas", lambdas, "comma-separated lambda values");
  attr->add_option("--out", aout, "output CSV");

  std::string lz = "1/2", lim = "1/6", window, lout = "levelcurve.csv";
  int grid = 200;
  auto* lc = app.add_subcommand("levelcurves", "level set through the saddle point");
  lc->add_option("--z", lz, "real part of z");
  lc->add_option("--im", lim, "imaginary part of z");
  lc->add_option("--window", window, "re_min,re_max,im_min,im_max");
  lc->add_option("--grid", grid, "nodes per axis");
  lc->add_option("--out", lout, "output CSV");

  std::string profile = "quick", vout, mutate;
  bool no_timing = false;
  auto* ver = app.add_subcommand("verify", "run the acceptance criteria");
  ver->add_option("--profile", profile, "quick | full");
  ver->add_option("--out", vout, "report JSON");
  ver->add_option("--mutate", mutate, "tamper with a reference coefficient: small-zero, middle-zero, gauss-encke, p-q");
  ver->add_flag("--no-timing", no_timing, "omit runtimes so the report is reproducible byte for byte");

  std::string kind = "conjecture", rout = "conjecture_report.json";
  int nmax = kCertifiedPositivityMaxN;
  auto* rep = app.add_subcommand("report", "conjecture positivity scan or Hessenberg eigenvalue check");
  rep->add_option("--kind", kind, "conjecture | hessenberg");
  rep->add_option("--nmax", nmax, "largest n");
  rep->add_option("--out", rout, "output JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    // flags > config file > BK2_PREC_BITS > defaults
    Settings s;
    s.prec = default_precision();
    if (!config.empty()) {
      auto kv = read_config(config);
      if (kv.count("prec")) s.prec = std::stol(kv["prec"]);
      if (kv.count("digits")) s.digits = std::stoi(kv["digits"]);
      if (kv.count("seed")) s.seed = std::stoull(kv["seed"], nullptr, 0);
    }
    if (prec_flag) s.prec = *prec_flag;
    if (digits_flag) s.digits = *digits_flag;
    if (seed_flag) s.seed = *seed_flag;
    if (s.prec < 64) throw DomainError("precision must be >= 64 bits");
    if (s.digits < 1 || s.digits > 1000) throw DomainError("digits must be in 1..1000");

    if (*eval) return cmd_eval(ea, s);
    if (*zeros) return cmd_zeros(zn, zk, zout, s);
    if (*expand) return cmd_expand(target, ek, parity, eorder, eout, s);
    if (*attr) return cmd_attractor(an, lambdas, aout, s);
    if (*lc) return cmd_levelcurves(lz, lim, window, grid, lout, s);
    if (*ver) return cmd_verify(profile, vout, mutate, !no_timing, s);
    if (*rep) return cmd_report(kind, nmax, rout, s);
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const PrecisionExhausted& e) {
    std::cerr << "precision exhausted: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const NonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const QuadratureNonConvergence& e) {
    std::cerr << "no convergence: " << e.what() << '\n';
    return kExitPrecision;
  } catch (const BracketFailure& e) {
    std::cerr << "bracket failure: " << e.what() << '\n';
    return kExitPrecision;
  }
  return kExitUsage;
}
