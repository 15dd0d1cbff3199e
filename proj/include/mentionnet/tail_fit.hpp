#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace mentionnet {

enum class TailFamily { power_law, truncated_power_law, lognormal, exponential };

std::string_view to_string(TailFamily family);

// Parameters not used by a family are NaN.
struct TailFit {
  TailFamily family = TailFamily::power_law;
  static constexpr double kUnused = std::numeric_limits<double>::quiet_NaN();

  double gamma = kUnused;   // exponent: power_law, truncated_power_law
  double lambda = kUnused;  // rate: truncated_power_law, exponential
  double mu = kUnused;      // lognormal location
  double sigma = kUnused;   // lognormal scale
  std::uint64_t x_min = 1;
  std::size_t n_tail = 0;
  double log_likelihood = 0;
  double ks_distance = 0;
  double gamma_std_error = kUnused;  // (gamma - 1) / sqrt(n_tail), power_law only
};

struct FitOptions {
  // When absent, x_min is chosen by scanning candidates with the power-law
  // fit and keeping the one with the smallest KS distance; every family then
  // uses that x_min.
  std::optional<std::uint64_t> x_min;
  std::size_t threads = 1;
};

// Models, all discrete and conditioned on k >= x_min:
//   power_law            p(k) = k^-gamma / zeta(gamma, x_min)
//   truncated_power_law  p(k) ~ k^-gamma exp(-lambda k), lambda >= 0
//   lognormal            p(k) ~ P(k - 1/2 < X < k + 1/2), ln X ~ N(mu, sigma^2)
//   exponential          p(k) = (1 - e^-lambda) e^-lambda (k - x_min)
// Zero degrees are ignored. Errors: fewer than two tail points or a tail of
// identical values -> Error(degenerate_data); optimizer failure ->
// Error(not_converged).
TailFit fit_power_law(std::span<const std::uint64_t> degrees, const FitOptions& options = {});
TailFit fit_truncated_power_law(std::span<const std::uint64_t> degrees,
                                const FitOptions& options = {});
TailFit fit_lognormal(std::span<const std::uint64_t> degrees, const FitOptions& options = {});
TailFit fit_exponential(std::span<const std::uint64_t> degrees, const FitOptions& options = {});
TailFit fit_family(TailFamily family, std::span<const std::uint64_t> degrees,
                   const FitOptions& options = {});

// Candidate x_min values: distinct observed degrees d >= 1 with at least 10%
// of the sample at or above d.
std::vector<std::uint64_t> xmin_candidates(std::span<const std::uint64_t> degrees);

// ln p(k) under a fitted model; -inf for k < x_min.
double log_pmf(const TailFit& fit, std::uint64_t k);
// P(K >= k) under a fitted model, k >= x_min.
double tail_ccdf(const TailFit& fit, std::uint64_t k);
// Exact supremum distance between the empirical tail CDF and the model CDF
// over all integers k >= x_min.
double ks_distance(const TailFit& fit, std::span<const std::uint64_t> degrees);

struct FitComparison {
  TailFamily family_a = TailFamily::power_law;
  TailFamily family_b = TailFamily::power_law;
  double normalized_lr = 0;              // positive favours a
  double p_value = 1;
  std::optional<TailFamily> preferred;  // empty means inconclusive
};

// Vuong test on pointwise log-likelihood differences over the shared tail.
// Throws Error(mismatched_xmin) if the fits disagree on x_min.
FitComparison compare(const TailFit& a, const TailFit& b, std::span<const std::uint64_t> degrees,
                      double alpha = 0.05);

// |p(xk) - x^-gamma p(k)| / p(xk) on the unnormalised power law.
double scale_invariance_check(const TailFit& fit, double x, double k);

struct FitSet {
  std::vector<TailFit> fits;  // power_law, truncated_power_law, lognormal, exponential
  std::vector<FitComparison> comparisons;  // every ordered pair a != b
};

FitSet fit_all(std::span<const std::uint64_t> degrees, const FitOptions& options = {},
               double alpha = 0.05);

}  // namespace mentionnet
