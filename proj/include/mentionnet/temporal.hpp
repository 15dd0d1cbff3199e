#pragma once

#include <map>
#include <optional>
#include <vector>

#include "mentionnet/ingest.hpp"
#include "mentionnet/metrics.hpp"
#include "mentionnet/tail_fit.hpp"

namespace mentionnet {

struct GrowthRow {
  Day day{};
  std::uint64_t cum_nodes = 0;
  std::uint64_t cum_links_directed = 0;
  std::uint64_t cum_links_undirected = 0;
  std::uint64_t cum_isolates = 0;
  std::uint64_t cum_components = 0;
  double density_directed = 0;
  double density_undirected = 0;
  double density_lcc = 0;
  std::optional<std::uint32_t> lcc_radius;
  std::optional<std::uint32_t> lcc_diameter;
  double avg_degree = 0;  // links_directed / nodes
  double avg_clustering = 0;
  // Absent when the day's tail cannot be fitted.
  std::optional<double> gamma_power_law;
  std::optional<double> gamma_truncated;
  std::optional<std::uint64_t> x_min;
  double common_node_fraction = 0;
  double common_link_fraction = 0;

  bool operator==(const GrowthRow&) const = default;
};

struct GrowthOptions {
  std::size_t threads = 1;
};

// Builds the row fields that come from one cumulative graph.
GrowthRow growth_row(Day day, const InteractionGraph& cumulative, std::size_t threads = 1);

// One row per observed UTC day, each describing the graph of every record up
// to and including that day. Exponents are refit per day on the cumulative
// undirected degree sequence.
std::vector<GrowthRow> growth_series(const std::vector<TweetRecord>& records, EdgeMode mode,
                                     const GrowthOptions& options = {});

enum class CommonElement { nodes, links };

// For each day after the first: the share of that day's active elements
// (authors and event endpoints; undirected pairs created by the day's
// events) already seen on an earlier day. The first day scores 0; a day with
// no active links scores 0 for links.
std::map<Day, double> commonality(const std::map<Day, std::vector<TweetRecord>>& records_by_day,
                                  EdgeMode mode, CommonElement element);

}  // namespace mentionnet
