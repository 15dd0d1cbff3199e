#include "mentionnet/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/tools/minima.hpp>

namespace mentionnet::optimize {
namespace {

constexpr double kHuge = 1e300;

double finite_or_huge(double v) { return std::isfinite(v) ? v : kHuge; }

}  // namespace

ScalarMinimum minimize_scalar(const std::function<double(double)>& raw, double start, double step,
                              double lower, double upper) {
  auto f = [&](double x) { return finite_or_huge(raw(x)); };
  auto clamp = [&](double x) { return std::clamp(x, lower, upper); };
  constexpr double kGrow = 1.618033988749895;

  double a = clamp(start);
  double fa = f(a);
  double b = clamp(a + step);
  double fb = f(b);
  double lo = 0, hi = 0;
  if (fb > fa) {
    double c = clamp(a - step);
    double fc = f(c);
    if (fc >= fa) {
      lo = std::min(b, c);
      hi = std::max(b, c);
    } else {
      step = -step;
      b = c;
      fb = fc;
    }
  }
  if (hi == lo) {
    // Walk downhill from a through b until the function turns up or a bound stops us.
    for (int i = 0; i < 200; ++i) {
      const double c = clamp(b + kGrow * (b - a));
      if (c == b) {
        lo = std::min(a, b);
        hi = std::max(a, b);
        break;
      }
      const double fc = f(c);
      if (fc > fb) {
        lo = std::min(a, c);
        hi = std::max(a, c);
        break;
      }
      a = b;
      fa = fb;
      b = c;
      fb = fc;
    }
    if (hi == lo) {
      lo = std::min(a, b);
      hi = std::max(a, b);
    }
  }

  constexpr int kBits = std::numeric_limits<double>::digits / 2;
  auto [x, fx] = boost::math::tools::brent_find_minima(f, lo, hi, kBits);
  // Brent stops short of an active bound; take the bound itself when it is no worse.
  for (const double bound : {lower, upper}) {
    if (std::abs(x - bound) < 1e-6 * (std::abs(upper - lower) + 1.0)) {
      const double fbound = f(bound);
      if (fbound <= fx) {
        x = bound;
        fx = fbound;
      }
    }
  }
  const double edge = 1e-7 * (std::abs(upper - lower) + 1.0);
  ScalarMinimum result{x, raw(x), false};
  result.at_bound = std::abs(x - lower) < edge || std::abs(x - upper) < edge;
  return result;
}

SimplexResult nelder_mead(const std::function<double(const Point2&)>& raw, Point2 start,
                          const SimplexOptions& options) {
  int evaluations = 0;
  auto clamp = [&](Point2 p) {
    for (int i = 0; i < 2; ++i) p[i] = std::clamp(p[i], options.lower[i], options.upper[i]);
    return p;
  };
  auto f = [&](const Point2& p) {
    ++evaluations;
    return finite_or_huge(raw(p));
  };

  SimplexResult result;
  result.x = clamp(start);
  result.value = f(result.x);

  for (int round = 0; round <= options.restarts; ++round) {
    std::array<Point2, 3> v;
    std::array<double, 3> fv;
    v[0] = result.x;
    fv[0] = result.value;
    for (int i = 0; i < 2; ++i) {
      Point2 p = result.x;
      p[i] += options.initial_step[i];
      if (clamp(p) == result.x) p[i] = result.x[i] - options.initial_step[i];
      v[i + 1] = clamp(p);
      fv[i + 1] = f(v[i + 1]);
    }

    bool converged = false;
    while (evaluations < options.max_evaluations) {
      std::array<int, 3> order{0, 1, 2};
      std::sort(order.begin(), order.end(), [&](int a, int b) { return fv[a] < fv[b]; });
      const auto best = order[0], mid = order[1], worst = order[2];

      double spread = 0;
      for (int i = 0; i < 2; ++i) {
        const double scale = std::max(1.0, std::abs(v[best][i]));
        spread = std::max({spread, std::abs(v[mid][i] - v[best][i]) / scale,
                           std::abs(v[worst][i] - v[best][i]) / scale});
      }
      if (spread <= options.x_tolerance) {
        converged = true;
        break;
      }

      Point2 centroid{(v[best][0] + v[mid][0]) / 2, (v[best][1] + v[mid][1]) / 2};
      auto along = [&](double t) {
        return clamp(Point2{centroid[0] + t * (v[worst][0] - centroid[0]),
                            centroid[1] + t * (v[worst][1] - centroid[1])});
      };
      const Point2 xr = along(-1.0);
      const double fr = f(xr);
      if (fr < fv[best]) {
        const Point2 xe = along(-2.0);
        const double fe = f(xe);
        if (fe < fr) {
          v[worst] = xe;
          fv[worst] = fe;
        } else {
          v[worst] = xr;
          fv[worst] = fr;
        }
        continue;
      }
      if (fr < fv[mid]) {
        v[worst] = xr;
        fv[worst] = fr;
        continue;
      }
      const bool outside = fr < fv[worst];
      const Point2 xc = along(outside ? -0.5 : 0.5);
      const double fc = f(xc);
      if (fc < (outside ? fr : fv[worst])) {
        v[worst] = xc;
        fv[worst] = fc;
        continue;
      }
      for (int k : {mid, worst}) {
        v[k] = clamp(Point2{(v[k][0] + v[best][0]) / 2, (v[k][1] + v[best][1]) / 2});
        fv[k] = f(v[k]);
      }
    }

    const auto best = static_cast<std::size_t>(std::min_element(fv.begin(), fv.end()) - fv.begin());
    const bool moved = fv[best] < result.value;
    if (moved) {
      result.x = v[best];
      result.value = fv[best];
    }
    result.converged = converged;
    if (!converged || !moved) break;
  }
  result.evaluations = evaluations;
  result.value = raw(result.x);
  return result;
}

}  // namespace mentionnet::optimize
