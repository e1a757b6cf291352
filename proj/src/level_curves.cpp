#include "bk2/level_curves.hpp"

#include <array>
#include <fstream>
#include <optional>

#include "bk2/asymptotics.hpp"
#include "bk2/errors.hpp"

namespace bk2 {

Real level_function(const Complex& xi, const Complex& z) {
  const Real& x = xi.re();
  const Real& y = xi.im();
  Real mod_xi = log(sqrt(x * x + y * y));
  Real u = x + 1L;
  Real mod_1 = log(sqrt(u * u + y * y));
  Real arg_1 = atan2(y, u);
  return mod_xi - (z.re() * mod_1 - z.im() * arg_1);
}

namespace {

struct Node {
  Complex xi;
  Real g;  // level_function - level
  bool valid;
};

// Nodes on the cut or at the origin are excluded.
bool off_branch(const Real& x, const Real& y) {
  if (y.is_zero() && (x <= -1L || x.is_zero())) return false;
  return true;
}

}  // namespace

LevelCurveSet level_curves(const Complex& z, const LevelWindow& w, int grid_size, Bits prec) {
  if (z.im().is_zero() && z.re() >= 0L && z.re() <= 1L) throw DomainError("level curves need z off [0, 1]");
  if (grid_size < 2) throw DomainError("grid_size must be >= 2");
  if (!(w.re_min < w.re_max && w.im_min < w.im_max)) throw DomainError("empty window");

  LevelCurveSet out;
  out.z = z.with_precision(prec);
  out.xi0 = saddle_point(out.z);
  out.level = level_function(out.xi0, out.z);
  out.tolerance = Real(1e-12, 64);
  const int N = grid_size;
  const Real dx = (Real(w.re_max, prec) - Real(w.re_min, prec)) / static_cast<long>(N - 1);
  const Real dy = (Real(w.im_max, prec) - Real(w.im_min, prec)) / static_cast<long>(N - 1);
  out.cell = std::max(dx.to_double(), dy.to_double());

  std::vector<Node> nodes;
  nodes.reserve(static_cast<size_t>(N) * N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      Real x = Real(w.re_min, prec) + dx * static_cast<long>(i);
      Real y = Real(w.im_min, prec) + dy * static_cast<long>(j);
      bool ok = off_branch(x, y);
      Complex xi(x, y);
      Real g = ok ? level_function(xi, out.z) - out.level : Real(prec);
      nodes.push_back({std::move(xi), std::move(g), ok});
    }
  auto at = [&](int i, int j) -> const Node& { return nodes[static_cast<size_t>(j) * N + i]; };

  // Vertical edges between im < 0 and im > 0 cross the real axis; skip them on
  // the cut and through the origin.
  auto crosses_branch = [](const Node& a, const Node& b) {
    if (a.xi.re() != b.xi.re()) return false;
    if (a.xi.im().sign() * b.xi.im().sign() >= 0) return false;
    return a.xi.re() <= -1L || a.xi.re().is_zero();
  };

  const int bisections = 60;
  auto crossing = [&](const Node& a, const Node& b) -> std::optional<Complex> {
    if (!a.valid || !b.valid || crosses_branch(a, b)) return std::nullopt;
    int sa = a.g.sign(), sb = b.g.sign();
    if (sa == 0) return a.xi;
    if (sb == 0 || sa == sb) return std::nullopt;
    Complex lo = a.xi, hi = b.xi;
    for (int it = 0; it < bisections; ++it) {
      Complex mid((lo.re() + hi.re()) / 2L, (lo.im() + hi.im()) / 2L);
      int sm = (level_function(mid, out.z) - out.level).sign();
      if (sm == 0) return mid;
      if (sm == sa) lo = mid;
      else hi = mid;
    }
    return Complex((lo.re() + hi.re()) / 2L, (lo.im() + hi.im()) / 2L);
  };

  // Horizontal edge (i,j)-(i+1,j) and vertical edge (i,j)-(i,j+1), each once.
  std::vector<std::optional<Complex>> hedge(static_cast<size_t>(N) * N), vedge(static_cast<size_t>(N) * N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < N; ++i) {
      if (i + 1 < N) hedge[static_cast<size_t>(j) * N + i] = crossing(at(i, j), at(i + 1, j));
      if (j + 1 < N) vedge[static_cast<size_t>(j) * N + i] = crossing(at(i, j), at(i, j + 1));
    }

  long seg = 0;
  auto emit = [&](const Complex& a, const Complex& b) {
    for (const Complex* p : {&a, &b}) {
      Real r = abs(level_function(*p, out.z) - out.level).with_precision(64);
      out.points.push_back({seg, p->with_precision(prec), r});
    }
    ++seg;
  };

  for (int j = 0; j + 1 < N; ++j)
    for (int i = 0; i + 1 < N; ++i) {
      // Edges: bottom, right, top, left.
      std::array<const std::optional<Complex>*, 4> e{&hedge[static_cast<size_t>(j) * N + i],
                                                     &vedge[static_cast<size_t>(j) * N + i + 1],
                                                     &hedge[static_cast<size_t>(j + 1) * N + i],
                                                     &vedge[static_cast<size_t>(j) * N + i]};
      std::vector<int> hit;
      for (int k = 0; k < 4; ++k)
        if (e[k]->has_value()) hit.push_back(k);
      if (hit.size() == 2) {
        emit(**e[hit[0]], **e[hit[1]]);
      } else if (hit.size() == 4) {
        // Ambiguous cell: decide by the sign at the center.
        Complex c((at(i, j).xi.re() + at(i + 1, j).xi.re()) / 2L, (at(i, j).xi.im() + at(i, j + 1).xi.im()) / 2L);
        int sc = off_branch(c.re(), c.im()) ? (level_function(c, out.z) - out.level).sign() : 0;
        if (sc == at(i, j).g.sign()) {
          emit(**e[0], **e[1]);
          emit(**e[2], **e[3]);
        } else {
          emit(**e[3], **e[0]);
          emit(**e[1], **e[2]);
        }
      }
    }
  out.points.push_back({-1, out.xi0, Real(64)});
  return out;
}

void write_levelcurve_csv(const std::string& path, const LevelCurveSet& set) {
  std::ofstream f(path);
  if (!f) throw DomainError("cannot open " + path);
  f << "kind,segment,re,im,residual\n";
  for (const auto& p : set.points)
    f << (p.segment < 0 ? "saddle" : "curve") << ',' << p.segment << ',' << p.xi.re().to_string(30) << ','
      << p.xi.im().to_string(30) << ',' << p.residual.to_string(6) << '\n';
}

}  // namespace bk2
