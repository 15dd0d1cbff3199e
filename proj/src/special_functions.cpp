#include "mentionnet/special_functions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include <boost/math/quadrature/exp_sinh.hpp>

namespace mentionnet::special {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// B_{2j} / (2j)!, j = 1..8
constexpr std::array<double, 8> kBernoulliOverFactorial{
    1.0 / 6.0 / 2.0,
    -1.0 / 30.0 / 24.0,
    1.0 / 42.0 / 720.0,
    -1.0 / 30.0 / 40320.0,
    5.0 / 66.0 / 3628800.0,
    -691.0 / 2730.0 / 479001600.0,
    7.0 / 6.0 / 87178291200.0,
    -3617.0 / 510.0 / 20922789888000.0,
};

double term(double s, double lambda, double x) { return std::exp(-s * std::log(x) - lambda * x); }

// m-th derivative of x^-s exp(-lambda x) by Leibniz's rule.
double derivative(double s, double lambda, double x, int m) {
  double total = 0.0;
  double binom = 1.0;       // C(m, i)
  double rising = 1.0;      // s (s+1) ... (s+i-1)
  double x_pow = std::pow(x, -s);
  for (int i = 0; i <= m; ++i) {
    const double power_part = ((i % 2) ? -1.0 : 1.0) * rising * x_pow;
    const double exp_part = std::pow(-lambda, m - i);
    total += binom * power_part * exp_part;
    binom = binom * (m - i) / (i + 1);
    rising *= s + i;
    x_pow /= x;
  }
  return total * std::exp(-lambda * x);
}

// integral_N^inf x^-s exp(-lambda x) dx
double tail_integral(double s, double lambda, double n) {
  if (lambda == 0.0) return std::pow(n, 1.0 - s) / (s - 1.0);
  const double z = lambda * n;
  boost::math::quadrature::exp_sinh<double> integrator;
  auto integrand = [&](double u) { return std::exp(-s * std::log1p(u) - z * u); };
  const double e_s = integrator.integrate(integrand, 1e-14) * std::exp(-z);
  return std::pow(n, 1.0 - s) * e_s;
}

}  // namespace

double truncated_zeta(double s, double lambda, double q) {
  if (!(q > 0.0) || lambda < 0.0 || std::isnan(s)) return std::numeric_limits<double>::quiet_NaN();
  if (lambda == 0.0 && s <= 1.0) return kInf;

  double sum = 0.0;
  double x = q;
  if (lambda > 1.0) {
    // Terms shrink at least geometrically once past the peak at -s/lambda.
    const double peak = -s / lambda;
    for (;; x += 1.0) {
      const double t = term(s, lambda, x);
      sum += t;
      if (x > peak && t <= 1e-18 * sum) break;
    }
    return sum;
  }

  const double direct = std::max(12.0, std::ceil(2.0 * std::abs(s)));
  const double n = q + direct;
  for (; x < n; x += 1.0) sum += term(s, lambda, x);

  double tail = tail_integral(s, lambda, n) + 0.5 * term(s, lambda, n);
  for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
    const double correction =
        kBernoulliOverFactorial[j] * derivative(s, lambda, n, static_cast<int>(2 * j + 1));
    tail -= correction;
    if (std::abs(correction) <= 1e-16 * (sum + tail)) break;
  }
  return sum + tail;
}

double log_normal_upper_tail(double z) {
  if (z < 30.0) return std::log(0.5 * std::erfc(z / std::numbers::sqrt2));
  // Asymptotic expansion of the Mills ratio.
  const double inv2 = 1.0 / (z * z);
  const double series = 1.0 - inv2 * (1.0 - 3.0 * inv2 * (1.0 - 5.0 * inv2 * (1.0 - 7.0 * inv2)));
  return -0.5 * z * z - std::log(z) - 0.5 * std::log(2.0 * std::numbers::pi) + std::log(series);
}

}  // namespace mentionnet::special
