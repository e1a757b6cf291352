#pragma once

// Level set Re f(xi, z) = Re f(xi0, z) of f(xi, z) = log xi - z log(1 + xi),
// xi0 = 1/(z - 1), by marching squares over a rectangular window. The cut
// (-inf, -1] and the point 0 are excluded.

#include <string>
#include <vector>

#include "bk2/real.hpp"

namespace bk2 {

struct LevelWindow {
  double re_min = -3, re_max = 2, im_min = -2, im_max = 2;
};

struct LevelCurvePoint {
  long segment = 0;  // marching-squares segment id; -1 for the saddle itself
  Complex xi{64};
  Real residual{64};  // |Re f(xi, z) - Re f(xi0, z)|
};

struct LevelCurveSet {
  Complex z{64};
  Complex xi0{64};
  Real level{64};
  Real tolerance{64};  // bound on every emitted residual
  double cell = 0;     // larger grid spacing
  std::vector<LevelCurvePoint> points;
};

// Re f(xi, z) with the principal branch of log(1 + xi).
Real level_function(const Complex& xi, const Complex& z);

// grid_size nodes per axis (>= 2). Each edge crossing is refined by
// bisection; z must lie off [0, 1].
LevelCurveSet level_curves(const Complex& z, const LevelWindow& window, int grid_size, Bits prec);

// kind,segment,re,im,residual with 30 significant digits.
void write_levelcurve_csv(const std::string& path, const LevelCurveSet& set);

}  // namespace bk2
