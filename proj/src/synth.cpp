#include "mentionnet/synth.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <random>
#include <set>

#include "mentionnet/graph.hpp"
#include "mentionnet/special_functions.hpp"

namespace mentionnet::synth {
namespace {

// mt19937_64 output is fixed by the standard; the conversions below are
// written out so draws do not depend on library distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  // (0, 1]
  double uniform_open_low() { return (static_cast<double>(engine_() >> 11) + 1.0) * 0x1.0p-53; }
  std::size_t below(std::size_t n) { return static_cast<std::size_t>(uniform() * static_cast<double>(n)); }

 private:
  std::mt19937_64 engine_;
};

class WeightedPicker {
 public:
  explicit WeightedPicker(const std::vector<double>& weights) : cumulative_(weights.size()) {
    double total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) cumulative_[i] = total += weights[i];
    for (auto& c : cumulative_) c /= total;
  }
  std::size_t pick(Rng& rng) const {
    const double u = rng.uniform();
    auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    return std::min<std::size_t>(static_cast<std::size_t>(it - cumulative_.begin()),
                                 cumulative_.size() - 1);
  }

 private:
  std::vector<double> cumulative_;
};

std::vector<double> zipf_weights(std::size_t n, double exponent) {
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::pow(static_cast<double>(i + 1), -exponent);
  return w;
}

constexpr std::array<const char*, 24> kVocabulary{
    "purdue", "university", "campus", "day", "giving", "boilermakers", "game", "football",
    "basketball", "students", "visit", "rally", "primary", "indiana", "research", "engineering",
    "graduation", "spring", "lafayette", "team", "great", "today", "the", "and"};

constexpr UserId kFirstUserId = 1'000'000;

}  // namespace

std::vector<std::uint64_t> sample_power_law(std::size_t n, double gamma, std::uint64_t x_min,
                                            std::uint64_t seed) {
  const double xm = static_cast<double>(x_min);
  const double z = special::hurwitz_zeta(gamma, xm);
  auto ccdf = [&](std::uint64_t k) { return special::hurwitz_zeta(gamma, static_cast<double>(k)) / z; };

  // ccdf for k = x_min .. x_min + table_size - 1, strictly decreasing.
  constexpr std::size_t kTable = 1 << 16;
  std::vector<double> table(kTable);
  for (std::size_t i = 0; i < kTable; ++i) table[i] = ccdf(x_min + i);

  Rng rng(seed);
  std::vector<std::uint64_t> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = rng.uniform_open_low();
    // Largest k with ccdf(k) >= u.
    if (u > table.back()) {
      auto it = std::upper_bound(table.begin(), table.end(), u, std::greater<>());
      out.push_back(x_min + static_cast<std::uint64_t>(it - table.begin()) - 1);
      continue;
    }
    std::uint64_t lo = x_min + kTable - 1;  // ccdf(lo) >= u
    std::uint64_t hi = lo * 2;
    while (ccdf(hi) >= u) {
      lo = hi;
      hi *= 2;
    }
    while (hi - lo > 1) {
      const std::uint64_t mid = lo + (hi - lo) / 2;
      (ccdf(mid) >= u ? lo : hi) = mid;
    }
    out.push_back(lo);
  }
  return out;
}

std::vector<TweetRecord> corpus(const CorpusSpec& spec) {
  Rng rng(spec.seed);
  const WeightedPicker authors(zipf_weights(spec.users, 0.6));
  const WeightedPicker mentioned(zipf_weights(spec.users, 1.1));
  std::vector<TweetRecord> records;
  records.reserve(spec.days * spec.tweets_per_day);
  TweetId next_id = 700'000'000'000'000'000ULL;
  for (std::size_t d = 0; d < spec.days; ++d) {
    const Timestamp day_start{spec.first_day + std::chrono::days{d}};
    std::vector<Timestamp> times(spec.tweets_per_day);
    for (auto& t : times) t = day_start + std::chrono::seconds{rng.below(86400)};
    std::sort(times.begin(), times.end());
    for (const auto& t : times) {
      TweetRecord r;
      r.tweet_id = next_id++;
      r.author_id = kFirstUserId + authors.pick(rng);
      r.created_at = t;
      const double kind = rng.uniform();
      if (kind < spec.p_no_mention) {
        // no mentions
      } else if (kind < spec.p_no_mention + spec.p_self_mention) {
        r.mention_ids.push_back(r.author_id);
      } else {
        const std::size_t count = 1 + rng.below(3);
        for (std::size_t m = 0; m < count; ++m) r.mention_ids.push_back(kFirstUserId + mentioned.pick(rng));
      }
      const std::size_t words = 4 + rng.below(8);
      for (std::size_t w = 0; w < words; ++w) {
        if (w) r.text += ' ';
        r.text += kVocabulary[rng.below(kVocabulary.size())];
      }
      records.push_back(std::move(r));
    }
  }
  return records;
}

std::vector<TweetRecord> graph_records(std::size_t nodes, std::size_t links, std::uint64_t seed) {
  Rng rng(seed);
  const WeightedPicker sources(zipf_weights(nodes, 0.9));
  const Timestamp when{Day{std::chrono::days{16907}}};
  std::vector<TweetRecord> records;
  TweetId next_id = 1;
  for (std::size_t i = 0; i < nodes; ++i) {
    records.push_back(TweetRecord{next_id++, kFirstUserId + i, when, "hello", {}});
  }
  const std::size_t max_links = nodes * (nodes - (nodes > 0 ? 1 : 0)) / 2;
  links = std::min(links, max_links);
  std::set<UndirectedEdge> seen;
  while (seen.size() < links) {
    const UserId author = kFirstUserId + rng.below(nodes);
    const UserId source = kFirstUserId + sources.pick(rng);
    if (author == source) continue;
    seen.insert(UndirectedEdge::of(author, source));
    records.push_back(TweetRecord{next_id++, author, when, "mention", {source}});
  }
  return records;
}

}  // namespace mentionnet::synth
