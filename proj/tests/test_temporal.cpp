#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "mentionnet/synth.hpp"
#include "mentionnet/temporal.hpp"
#include "mentionnet/time_util.hpp"

using namespace mentionnet;

namespace {

TweetRecord at(TweetId id, const char* when, UserId author, std::vector<UserId> mentions) {
  return TweetRecord{id, author, *parse_timestamp(when), "", std::move(mentions)};
}

// Users: A=1, B=2, C=3. Day 1 has the link A-B, day 2 has B-C.
std::vector<TweetRecord> two_days() {
  return {at(1, "2016-04-16T10:00:00Z", 2, {1}), at(2, "2016-04-17T10:00:00Z", 3, {2})};
}

synth::CorpusSpec small_corpus() {
  synth::CorpusSpec spec;
  spec.days = 5;
  spec.tweets_per_day = 400;
  spec.users = 600;
  spec.seed = 3;
  return spec;
}

}  // namespace

TEST(Growth, TwoDayFixture) {
  const auto rows = growth_series(two_days(), EdgeMode::root_only);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].cum_nodes, 2u);
  EXPECT_EQ(rows[0].cum_links_directed, 1u);
  EXPECT_EQ(rows[0].cum_links_undirected, 1u);
  EXPECT_EQ(rows[1].cum_nodes, 3u);
  EXPECT_EQ(rows[1].cum_links_directed, 2u);
  EXPECT_EQ(format_day(rows[1].day), "2016-04-17");
  EXPECT_FALSE(rows[0].gamma_power_law);
  EXPECT_DOUBLE_EQ(rows[1].common_node_fraction, 0.5);
  EXPECT_DOUBLE_EQ(rows[1].common_link_fraction, 0.0);
}

TEST(Growth, EmptyAndSingleDay) {
  EXPECT_TRUE(growth_series({}, EdgeMode::root_only).empty());
  const auto records = synth::corpus([] {
    auto s = small_corpus();
    s.days = 1;
    return s;
  }());
  const auto rows = growth_series(records, EdgeMode::root_only);
  ASSERT_EQ(rows.size(), 1u);
  const auto g = build_graph(records, EdgeMode::root_only);
  const auto r = full_report(g);
  EXPECT_EQ(rows[0].cum_nodes, r.nodes_directed);
  EXPECT_EQ(rows[0].cum_components, r.component_count);
  EXPECT_EQ(rows[0].avg_clustering, r.avg_clustering_undirected);
  EXPECT_EQ(rows[0].lcc_diameter, r.lcc_diameter);
}

TEST(Growth, FinalRowEqualsSingleShotAnalysis) {
  const auto records = synth::corpus(small_corpus());
  const auto rows = growth_series(records, EdgeMode::all_mentions);
  ASSERT_EQ(rows.size(), 5u);
  const auto g = build_graph(records, EdgeMode::all_mentions);
  auto expected = growth_row(rows.back().day, g);
  expected.common_node_fraction = rows.back().common_node_fraction;
  expected.common_link_fraction = rows.back().common_link_fraction;
  EXPECT_EQ(rows.back(), expected);
  ASSERT_TRUE(expected.gamma_power_law);
  const auto pl = fit_power_law(undirected_degrees(g));
  EXPECT_EQ(*expected.gamma_power_law, pl.gamma);
}

TEST(Growth, MonotoneAndFractionBounds) {
  const auto rows = growth_series(synth::corpus(small_corpus()), EdgeMode::root_only);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_GE(rows[i].cum_nodes, rows[i - 1].cum_nodes);
    EXPECT_GE(rows[i].cum_links_directed, rows[i - 1].cum_links_directed);
    EXPECT_GE(rows[i].cum_links_undirected, rows[i - 1].cum_links_undirected);
  }
  for (const auto& r : rows) {
    for (double f : {r.common_node_fraction, r.common_link_fraction, r.density_directed,
                     r.density_undirected, r.density_lcc, r.avg_clustering}) {
      EXPECT_GE(f, 0.0);
      EXPECT_LE(f, 1.0);
    }
  }
}

TEST(Growth, DroppingLastDayTruncatesOneRow) {
  const auto records = synth::corpus(small_corpus());
  const auto rows = growth_series(records, EdgeMode::root_only);
  const auto last = utc_day(records.back().created_at);
  std::vector<TweetRecord> kept;
  std::copy_if(records.begin(), records.end(), std::back_inserter(kept),
               [&](const TweetRecord& r) { return utc_day(r.created_at) != last; });
  const auto shorter = growth_series(kept, EdgeMode::root_only);
  ASSERT_EQ(shorter.size() + 1, rows.size());
  for (std::size_t i = 0; i < shorter.size(); ++i) EXPECT_EQ(shorter[i], rows[i]);
}

TEST(Growth, ThreadCountInvariant) {
  const auto records = synth::corpus(small_corpus());
  const auto base = growth_series(records, EdgeMode::root_only, GrowthOptions{1});
  for (std::size_t t : {4u, 8u}) EXPECT_EQ(growth_series(records, EdgeMode::root_only, GrowthOptions{t}), base);
}

TEST(Commonality, HandFixtures) {
  const auto days = bucket_by_day(two_days());
  const auto nodes = commonality(days, EdgeMode::root_only, CommonElement::nodes);
  ASSERT_EQ(nodes.size(), 2u);
  EXPECT_EQ(nodes.begin()->second, 0.0);
  EXPECT_DOUBLE_EQ(nodes.rbegin()->second, 0.5);

  const auto repeat = bucket_by_day({at(1, "2016-04-16T10:00:00Z", 2, {1}), at(2, "2016-04-17T09:00:00Z", 2, {1})});
  EXPECT_DOUBLE_EQ(commonality(repeat, EdgeMode::root_only, CommonElement::nodes).rbegin()->second, 1.0);
  EXPECT_DOUBLE_EQ(commonality(repeat, EdgeMode::root_only, CommonElement::links).rbegin()->second, 1.0);
}

TEST(Commonality, WithinDayOrderInvariant) {
  auto records = synth::corpus(small_corpus());
  const auto base = commonality(bucket_by_day(records), EdgeMode::root_only, CommonElement::links);
  std::mt19937_64 rng(2);
  std::shuffle(records.begin(), records.end(), rng);
  EXPECT_EQ(commonality(bucket_by_day(records), EdgeMode::root_only, CommonElement::links), base);
}
