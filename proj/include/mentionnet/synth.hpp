#pragma once

#include <cstdint>
#include <vector>

#include "mentionnet/ingest.hpp"

namespace mentionnet::synth {

// Exact inverse-CDF draws from the discrete power law k^-gamma / zeta(gamma, x_min).
std::vector<std::uint64_t> sample_power_law(std::size_t n, double gamma, std::uint64_t x_min,
                                            std::uint64_t seed);

struct CorpusSpec {
  std::size_t days = 5;
  std::size_t tweets_per_day = 2000;
  std::size_t users = 3000;
  std::uint64_t seed = 1;
  Day first_day = Day{std::chrono::days{16907}};  // 2016-04-16
  double p_no_mention = 0.35;
  double p_self_mention = 0.10;
};

// Tweets with popularity-skewed authors and mentions, spread over
// consecutive UTC days. Same spec and seed give the same corpus.
std::vector<TweetRecord> corpus(const CorpusSpec& spec);

// Records whose graph has exactly `nodes` nodes and `links` undirected links:
// one mention-less tweet per user, then single-mention tweets with
// popularity-skewed sources until the link count is reached.
std::vector<TweetRecord> graph_records(std::size_t nodes, std::size_t links, std::uint64_t seed);

}  // namespace mentionnet::synth
