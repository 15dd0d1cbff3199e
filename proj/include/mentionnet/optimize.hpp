#pragma once

#include <array>
#include <functional>

namespace mentionnet::optimize {

struct ScalarMinimum {
  double x = 0;
  double value = 0;
  bool at_bound = false;  // the minimum sits on lower or upper
};

// Derivative-free bounded minimization. Walks out from `start` with a
// growing step until the minimum is bracketed inside [lower, upper], then
// refines with Brent's method at half double precision (the best location
// accuracy a function-value search can reach, ~1.5e-8 relative).
ScalarMinimum minimize_scalar(const std::function<double(double)>& f, double start, double step,
                              double lower, double upper);

using Point2 = std::array<double, 2>;

struct SimplexOptions {
  Point2 initial_step{0.1, 0.1};
  Point2 lower{-1e300, -1e300};
  Point2 upper{1e300, 1e300};
  double x_tolerance = 1e-8;
  int max_evaluations = 20000;
  int restarts = 3;
};

struct SimplexResult {
  Point2 x{};
  double value = 0;
  int evaluations = 0;
  bool converged = false;
};

// Nelder-Mead on a box: trial points are clamped into [lower, upper]. The
// returned value is never worse than f(start). After convergence the simplex
// is rebuilt around the best point and the search repeats, up to `restarts`
// times or until a restart no longer moves the point.
SimplexResult nelder_mead(const std::function<double(const Point2&)>& f, Point2 start,
                          const SimplexOptions& options = {});

}  // namespace mentionnet::optimize
