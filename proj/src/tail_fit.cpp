#include "mentionnet/tail_fit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "mentionnet/optimize.hpp"
#include "mentionnet/parallel.hpp"
#include "mentionnet/special_functions.hpp"
#include "mentionnet/types.hpp"

namespace mentionnet {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kMaxGamma = 50.0;

// Positive degrees as ascending (value, count) pairs with suffix sums, so a
// tail for any x_min is a view starting at some index.
struct SortedSample {
  std::vector<std::uint64_t> values;
  std::vector<std::uint64_t> counts;
  std::vector<std::uint64_t> suffix_n;
  std::vector<double> suffix_log;
  std::vector<double> suffix_k;

  explicit SortedSample(std::span<const std::uint64_t> degrees) {
    std::vector<std::uint64_t> sorted;
    sorted.reserve(degrees.size());
    for (auto d : degrees) {
      if (d > 0) sorted.push_back(d);
    }
    std::sort(sorted.begin(), sorted.end());
    for (auto d : sorted) {
      if (values.empty() || values.back() != d) {
        values.push_back(d);
        counts.push_back(0);
      }
      ++counts.back();
    }
    const auto m = values.size();
    suffix_n.assign(m + 1, 0);
    suffix_log.assign(m + 1, 0.0);
    suffix_k.assign(m + 1, 0.0);
    for (std::size_t i = m; i-- > 0;) {
      const double c = static_cast<double>(counts[i]);
      suffix_n[i] = suffix_n[i + 1] + counts[i];
      suffix_log[i] = suffix_log[i + 1] + c * std::log(static_cast<double>(values[i]));
      suffix_k[i] = suffix_k[i + 1] + c * static_cast<double>(values[i]);
    }
  }

  std::size_t first_at_least(std::uint64_t x_min) const {
    return static_cast<std::size_t>(std::lower_bound(values.begin(), values.end(), x_min) -
                                    values.begin());
  }
};

struct Tail {
  const SortedSample* sample;
  std::size_t start;
  std::uint64_t x_min;

  std::size_t n() const { return sample->suffix_n[start]; }
  double sum_log() const { return sample->suffix_log[start]; }
  double sum_k() const { return sample->suffix_k[start]; }
  std::size_t distinct() const { return sample->values.size() - start; }
};

Tail tail_of(const SortedSample& sample, std::uint64_t x_min) {
  return Tail{&sample, sample.first_at_least(x_min), x_min};
}

void require_fittable(const Tail& tail) {
  if (tail.n() < 2) {
    throw Error(ErrorKind::degenerate_data,
                "fewer than two observations at or above x_min=" + std::to_string(tail.x_min));
  }
  if (tail.distinct() < 2) {
    throw Error(ErrorKind::degenerate_data,
                "all tail observations are equal; the likelihood is unbounded");
  }
}

double log_q(double z) { return special::log_normal_upper_tail(z); }

// ln P(a < Z < b) for a standard normal Z, a < b.
double log_normal_interval(double a, double b) {
  if (a >= 0) return log_q(a) + std::log1p(-std::exp(log_q(b) - log_q(a)));
  if (b <= 0) return log_q(-b) + std::log1p(-std::exp(log_q(-a) - log_q(-b)));
  return std::log1p(-(std::exp(log_q(b)) + std::exp(log_q(-a))));
}

// Fitted model with its normaliser cached.
class Model {
 public:
  explicit Model(const TailFit& fit) : fit_(fit) {
    const double xm = static_cast<double>(fit.x_min);
    switch (fit.family) {
      case TailFamily::power_law:
        log_norm_ = std::log(special::hurwitz_zeta(fit.gamma, xm));
        break;
      case TailFamily::truncated_power_law:
        log_norm_ = std::log(special::truncated_zeta(fit.gamma, fit.lambda, xm));
        break;
      case TailFamily::lognormal:
        log_norm_ = log_q((std::log(xm - 0.5) - fit.mu) / fit.sigma);
        break;
      case TailFamily::exponential:
        log_norm_ = 0.0;
        break;
    }
  }

  double log_pmf(std::uint64_t k) const {
    if (k < fit_.x_min) return kNegInf;
    const double x = static_cast<double>(k);
    switch (fit_.family) {
      case TailFamily::power_law:
        return -fit_.gamma * std::log(x) - log_norm_;
      case TailFamily::truncated_power_law:
        return -fit_.gamma * std::log(x) - fit_.lambda * x - log_norm_;
      case TailFamily::lognormal:
        return log_normal_interval((std::log(x - 0.5) - fit_.mu) / fit_.sigma,
                                   (std::log(x + 0.5) - fit_.mu) / fit_.sigma) -
               log_norm_;
      case TailFamily::exponential:
        return std::log1p(-std::exp(-fit_.lambda)) -
               fit_.lambda * static_cast<double>(k - fit_.x_min);
    }
    return kNegInf;
  }

  // P(K >= k), k >= x_min.
  double ccdf(std::uint64_t k) const {
    if (k <= fit_.x_min) return 1.0;
    const double x = static_cast<double>(k);
    switch (fit_.family) {
      case TailFamily::power_law:
        return std::exp(std::log(special::hurwitz_zeta(fit_.gamma, x)) - log_norm_);
      case TailFamily::truncated_power_law:
        return std::exp(std::log(special::truncated_zeta(fit_.gamma, fit_.lambda, x)) - log_norm_);
      case TailFamily::lognormal:
        return std::exp(log_q((std::log(x - 0.5) - fit_.mu) / fit_.sigma) - log_norm_);
      case TailFamily::exponential:
        return std::exp(-fit_.lambda * static_cast<double>(k - fit_.x_min));
    }
    return 0.0;
  }

 private:
  TailFit fit_;
  double log_norm_ = 0;
};

double ks_on_tail(const Model& model, const Tail& tail) {
  const auto& s = *tail.sample;
  const double n = static_cast<double>(tail.n());
  double d = 0.0;
  std::uint64_t cumulative = 0;
  const auto end = s.values.size();
  if (tail.start < end && s.values[tail.start] > tail.x_min) {
    d = 1.0 - model.ccdf(s.values[tail.start]);  // S = 0 below the first observation
  }
  for (std::size_t i = tail.start; i < end; ++i) {
    const auto k = s.values[i];
    cumulative += s.counts[i];
    const double emp = static_cast<double>(cumulative) / n;
    const double next_ccdf = model.ccdf(k + 1);
    d = std::max(d, std::abs(emp - (1.0 - next_ccdf)));
    // Empirical CDF is flat until the next observation; the model CDF peaks
    // just before it.
    if (i + 1 < end && s.values[i + 1] > k + 1) {
      d = std::max(d, std::abs(emp - (1.0 - model.ccdf(s.values[i + 1]))));
    }
  }
  return std::clamp(d, 0.0, 1.0);
}

double power_law_loglik(const Tail& tail, double gamma) {
  const double z = special::hurwitz_zeta(gamma, static_cast<double>(tail.x_min));
  return -gamma * tail.sum_log() - static_cast<double>(tail.n()) * std::log(z);
}

// Same expression shape as power_law_loglik, so lambda == 0 reproduces it exactly.
double truncated_loglik(const Tail& tail, double gamma, double lambda) {
  const double z = special::truncated_zeta(gamma, lambda, static_cast<double>(tail.x_min));
  return -gamma * tail.sum_log() - lambda * tail.sum_k() - static_cast<double>(tail.n()) * std::log(z);
}

double lognormal_loglik(const Tail& tail, double mu, double sigma) {
  TailFit f;
  f.family = TailFamily::lognormal;
  f.mu = mu;
  f.sigma = sigma;
  f.x_min = tail.x_min;
  const Model model(f);
  const auto& s = *tail.sample;
  double ll = 0.0;
  for (std::size_t i = tail.start; i < s.values.size(); ++i) {
    ll += static_cast<double>(s.counts[i]) * model.log_pmf(s.values[i]);
  }
  return ll;
}

double exponential_loglik(const Tail& tail, double lambda) {
  const double n = static_cast<double>(tail.n());
  const double excess = tail.sum_k() - n * static_cast<double>(tail.x_min);
  return n * std::log1p(-std::exp(-lambda)) - lambda * excess;
}

TailFit finish(TailFit fit, const Tail& tail) {
  fit.x_min = tail.x_min;
  fit.n_tail = tail.n();
  fit.ks_distance = ks_on_tail(Model(fit), tail);
  return fit;
}

TailFit power_law_at(const Tail& tail) {
  require_fittable(tail);
  const double n = static_cast<double>(tail.n());
  const double shifted = tail.sum_log() - n * std::log(static_cast<double>(tail.x_min) - 0.5);
  // Continuous approximation as the starting point.
  double guess = 1.0 + n / shifted;
  if (!std::isfinite(guess)) guess = 2.5;
  guess = std::clamp(guess, 1.05, kMaxGamma - 1.0);
  auto best = optimize::minimize_scalar([&](double g) { return -power_law_loglik(tail, g); },
                                        guess, 0.05, 1.0 + 1e-9, kMaxGamma);
  if (best.at_bound || !std::isfinite(best.value)) {
    throw Error(ErrorKind::degenerate_data,
                "power-law exponent diverges at x_min=" + std::to_string(tail.x_min));
  }
  TailFit fit;
  fit.family = TailFamily::power_law;
  fit.gamma = best.x;
  fit.log_likelihood = -best.value;
  fit.gamma_std_error = (fit.gamma - 1.0) / std::sqrt(n);
  return finish(fit, tail);
}

TailFit truncated_at(const Tail& tail) {
  const TailFit pure = power_law_at(tail);
  // Optimise over (gamma, lambda * mean_k) so both coordinates are O(1).
  const double scale = tail.sum_k() / static_cast<double>(tail.n());
  optimize::SimplexOptions opts;
  opts.initial_step = {0.1, 0.1};
  opts.lower = {-20.0, 0.0};
  opts.upper = {kMaxGamma, 50.0 * scale};
  const auto objective = [&](const optimize::Point2& p) { return -truncated_loglik(tail, p[0], p[1] / scale); };
  // A simplex started on the lambda = 0 face can collapse onto it, so also start inside.
  auto result = optimize::nelder_mead(objective, {pure.gamma, 0.0}, opts);
  for (const optimize::Point2 start : {optimize::Point2{pure.gamma - 0.5, 0.5}, optimize::Point2{1.0, 1.0}}) {
    const auto other = optimize::nelder_mead(objective, start, opts);
    if (other.converged && (!result.converged || other.value < result.value)) result = other;
  }
  if (!result.converged) {
    std::ostringstream msg;
    msg << "truncated power-law fit did not converge at x_min=" << tail.x_min << " after "
        << result.evaluations << " evaluations (gamma=" << result.x[0]
        << ", lambda=" << result.x[1] / scale << ")";
    throw Error(ErrorKind::not_converged, msg.str());
  }
  if (result.x[0] <= opts.lower[0] + 1e-6 || result.x[1] >= opts.upper[1] * (1.0 - 1e-9)) {
    throw Error(ErrorKind::degenerate_data, "truncated power-law parameters diverge at x_min=" +
                                                std::to_string(tail.x_min));
  }
  TailFit fit;
  fit.family = TailFamily::truncated_power_law;
  fit.gamma = result.x[0];
  fit.lambda = result.x[1] / scale;
  fit.log_likelihood = -result.value;
  return finish(fit, tail);
}

TailFit lognormal_at(const Tail& tail) {
  require_fittable(tail);
  const auto& s = *tail.sample;
  const double n = static_cast<double>(tail.n());
  const double mean_log = tail.sum_log() / n;
  double var_log = 0.0;
  for (std::size_t i = tail.start; i < s.values.size(); ++i) {
    const double dev = std::log(static_cast<double>(s.values[i])) - mean_log;
    var_log += static_cast<double>(s.counts[i]) * dev * dev;
  }
  const double sigma0 = std::max(std::sqrt(var_log / n), 0.1);
  optimize::SimplexOptions opts;
  opts.initial_step = {0.5, 0.2};
  opts.lower = {-100.0, std::log(1e-3)};
  opts.upper = {100.0, std::log(1e3)};
  auto result = optimize::nelder_mead(
      [&](const optimize::Point2& p) { return -lognormal_loglik(tail, p[0], std::exp(p[1])); },
      {mean_log, std::log(sigma0)}, opts);
  if (!result.converged) {
    throw Error(ErrorKind::not_converged, "lognormal fit did not converge at x_min=" +
                                              std::to_string(tail.x_min));
  }
  TailFit fit;
  fit.family = TailFamily::lognormal;
  fit.mu = result.x[0];
  fit.sigma = std::exp(result.x[1]);
  fit.log_likelihood = -result.value;
  return finish(fit, tail);
}

TailFit exponential_at(const Tail& tail) {
  require_fittable(tail);
  const double n = static_cast<double>(tail.n());
  const double mean_excess = tail.sum_k() / n - static_cast<double>(tail.x_min);
  const double guess = std::log(std::log1p(1.0 / mean_excess));
  auto best = optimize::minimize_scalar(
      [&](double u) { return -exponential_loglik(tail, std::exp(u)); }, guess, 0.5, -30.0, 10.0);
  if (best.at_bound) {
    throw Error(ErrorKind::degenerate_data, "exponential rate diverges at x_min=" +
                                                std::to_string(tail.x_min));
  }
  TailFit fit;
  fit.family = TailFamily::exponential;
  fit.lambda = std::exp(best.x);
  fit.log_likelihood = -best.value;
  return finish(fit, tail);
}

TailFit fit_at(TailFamily family, const Tail& tail) {
  switch (family) {
    case TailFamily::power_law: return power_law_at(tail);
    case TailFamily::truncated_power_law: return truncated_at(tail);
    case TailFamily::lognormal: return lognormal_at(tail);
    case TailFamily::exponential: return exponential_at(tail);
  }
  throw Error(ErrorKind::invalid_argument, "unknown family");
}

std::vector<std::uint64_t> candidates_of(const SortedSample& s) {
  std::vector<std::uint64_t> out;
  const auto total = s.suffix_n.empty() ? 0 : s.suffix_n[0];
  for (std::size_t i = 0; i < s.values.size(); ++i) {
    // at least 10% of the sample must remain in the tail
    if (10 * s.suffix_n[i] >= total) out.push_back(s.values[i]);
  }
  return out;
}

std::uint64_t select_xmin(const SortedSample& s, std::size_t threads) {
  const auto candidates = candidates_of(s);
  std::vector<std::optional<TailFit>> fits(candidates.size());
  parallel_for(candidates.size(), threads, [&](std::size_t i) {
    try {
      fits[i] = power_law_at(tail_of(s, candidates[i]));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::degenerate_data) throw;
    }
  });
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < fits.size(); ++i) {
    if (!fits[i]) continue;
    if (!best || fits[i]->ks_distance < fits[*best]->ks_distance) best = i;
  }
  if (!best) throw Error(ErrorKind::degenerate_data, "no x_min candidate admits a power-law fit");
  return candidates[*best];
}

std::uint64_t resolve_xmin(const SortedSample& s, const FitOptions& options) {
  if (options.x_min) {
    if (*options.x_min < 1) throw Error(ErrorKind::invalid_argument, "x_min must be at least 1");
    return *options.x_min;
  }
  return select_xmin(s, options.threads);
}

}  // namespace

std::string_view to_string(TailFamily family) {
  switch (family) {
    case TailFamily::power_law: return "power_law";
    case TailFamily::truncated_power_law: return "truncated_power_law";
    case TailFamily::lognormal: return "lognormal";
    case TailFamily::exponential: return "exponential";
  }
  return "unknown";
}

TailFit fit_family(TailFamily family, std::span<const std::uint64_t> degrees,
                   const FitOptions& options) {
  const SortedSample sample(degrees);
  return fit_at(family, tail_of(sample, resolve_xmin(sample, options)));
}

TailFit fit_power_law(std::span<const std::uint64_t> degrees, const FitOptions& options) {
  return fit_family(TailFamily::power_law, degrees, options);
}
TailFit fit_truncated_power_law(std::span<const std::uint64_t> degrees, const FitOptions& options) {
  return fit_family(TailFamily::truncated_power_law, degrees, options);
}
TailFit fit_lognormal(std::span<const std::uint64_t> degrees, const FitOptions& options) {
  return fit_family(TailFamily::lognormal, degrees, options);
}
TailFit fit_exponential(std::span<const std::uint64_t> degrees, const FitOptions& options) {
  return fit_family(TailFamily::exponential, degrees, options);
}

std::vector<std::uint64_t> xmin_candidates(std::span<const std::uint64_t> degrees) {
  return candidates_of(SortedSample(degrees));
}

double log_pmf(const TailFit& fit, std::uint64_t k) { return Model(fit).log_pmf(k); }

double tail_ccdf(const TailFit& fit, std::uint64_t k) { return Model(fit).ccdf(k); }

double ks_distance(const TailFit& fit, std::span<const std::uint64_t> degrees) {
  const SortedSample sample(degrees);
  return ks_on_tail(Model(fit), tail_of(sample, fit.x_min));
}

FitComparison compare(const TailFit& a, const TailFit& b, std::span<const std::uint64_t> degrees,
                      double alpha) {
  if (a.x_min != b.x_min) {
    throw Error(ErrorKind::mismatched_xmin, "cannot compare fits with x_min " +
                                                std::to_string(a.x_min) + " and " +
                                                std::to_string(b.x_min));
  }
  const SortedSample sample(degrees);
  const Tail tail = tail_of(sample, a.x_min);
  FitComparison out;
  out.family_a = a.family;
  out.family_b = b.family;
  const double n = static_cast<double>(tail.n());
  if (tail.n() == 0) return out;

  const Model ma(a), mb(b);
  std::vector<double> diffs;
  diffs.reserve(tail.distinct());
  double sum = 0.0;
  for (std::size_t i = tail.start; i < sample.values.size(); ++i) {
    const double d = ma.log_pmf(sample.values[i]) - mb.log_pmf(sample.values[i]);
    diffs.push_back(d);
    sum += static_cast<double>(sample.counts[i]) * d;
  }
  const double mean = sum / n;
  double var = 0.0;
  for (std::size_t j = 0; j < diffs.size(); ++j) {
    const double dev = diffs[j] - mean;
    var += static_cast<double>(sample.counts[tail.start + j]) * dev * dev;
  }
  var /= n;
  if (!(var > 0.0) || !std::isfinite(var)) return out;

  out.normalized_lr = mean / std::sqrt(var) * std::sqrt(n);
  out.p_value = std::erfc(std::abs(out.normalized_lr) / std::numbers::sqrt2);
  if (out.p_value <= alpha && out.normalized_lr != 0.0) {
    out.preferred = out.normalized_lr > 0 ? a.family : b.family;
  }
  return out;
}

double scale_invariance_check(const TailFit& fit, double x, double k) {
  if (fit.family != TailFamily::power_law) {
    throw Error(ErrorKind::invalid_argument, "scale invariance applies to the power law only");
  }
  const double p_xk = std::pow(x * k, -fit.gamma);
  const double rescaled = std::pow(x, -fit.gamma) * std::pow(k, -fit.gamma);
  return std::abs(p_xk - rescaled) / p_xk;
}

FitSet fit_all(std::span<const std::uint64_t> degrees, const FitOptions& options, double alpha) {
  const SortedSample sample(degrees);
  const Tail tail = tail_of(sample, resolve_xmin(sample, options));
  FitSet set;
  for (auto family : {TailFamily::power_law, TailFamily::truncated_power_law,
                      TailFamily::lognormal, TailFamily::exponential}) {
    set.fits.push_back(fit_at(family, tail));
  }
  for (const auto& a : set.fits) {
    for (const auto& b : set.fits) {
      if (a.family != b.family) set.comparisons.push_back(compare(a, b, degrees, alpha));
    }
  }
  return set;
}

}  // namespace mentionnet
