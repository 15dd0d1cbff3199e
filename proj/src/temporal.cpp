#include "mentionnet/temporal.hpp"

#include <set>

namespace mentionnet {

GrowthRow growth_row(Day day, const InteractionGraph& cumulative, std::size_t threads) {
  const auto report = full_report(cumulative, threads);
  GrowthRow row;
  row.day = day;
  row.cum_nodes = report.nodes_directed;
  row.cum_links_directed = report.links_directed;
  row.cum_links_undirected = report.links_undirected;
  row.cum_isolates = report.isolate_count;
  row.cum_components = report.component_count;
  row.density_directed = report.density_directed;
  row.density_undirected = report.density_undirected;
  row.density_lcc = report.lcc_density;
  row.lcc_radius = report.lcc_radius;
  row.lcc_diameter = report.lcc_diameter;
  row.avg_degree = report.avg_degree_directed;
  row.avg_clustering = report.avg_clustering_undirected;

  const auto degrees = undirected_degrees(cumulative);
  FitOptions options;
  options.threads = threads;
  try {
    const auto pl = fit_power_law(degrees, options);
    row.gamma_power_law = pl.gamma;
    row.x_min = pl.x_min;
    options.x_min = pl.x_min;
    row.gamma_truncated = fit_truncated_power_law(degrees, options).gamma;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::degenerate_data && e.kind() != ErrorKind::not_converged) throw;
  }
  return row;
}

std::vector<GrowthRow> growth_series(const std::vector<TweetRecord>& records, EdgeMode mode,
                                     const GrowthOptions& options) {
  const auto by_day = bucket_by_day(records);
  std::vector<GrowthRow> rows;
  if (by_day.empty()) return rows;

  const auto nodes_common = commonality(by_day, mode, CommonElement::nodes);
  const auto links_common = commonality(by_day, mode, CommonElement::links);
  InteractionGraph cumulative;
  for (const auto& [day, day_records] : by_day) {
    cumulative = merge(cumulative, build_graph(day_records, mode));
    auto row = growth_row(day, cumulative, options.threads);
    row.common_node_fraction = nodes_common.at(day);
    row.common_link_fraction = links_common.at(day);
    rows.push_back(row);
  }
  return rows;
}

std::map<Day, double> commonality(const std::map<Day, std::vector<TweetRecord>>& records_by_day,
                                  EdgeMode mode, CommonElement element) {
  std::map<Day, double> out;
  std::set<UserId> seen_nodes;
  std::set<UndirectedEdge> seen_links;
  bool first = true;
  for (const auto& [day, records] : records_by_day) {
    std::set<UserId> active_nodes;
    std::set<UndirectedEdge> active_links;
    for (const auto& r : records) {
      active_nodes.insert(r.author_id);
      for (const auto& e : extract_events(r, mode)) {
        active_nodes.insert(e.source);
        active_links.insert(UndirectedEdge::of(e.source, e.target));
      }
    }
    double fraction = 0.0;
    if (!first) {
      std::size_t repeated = 0, total = 0;
      if (element == CommonElement::nodes) {
        total = active_nodes.size();
        for (auto id : active_nodes) repeated += seen_nodes.count(id);
      } else {
        total = active_links.size();
        for (const auto& l : active_links) repeated += seen_links.count(l);
      }
      fraction = total == 0 ? 0.0 : static_cast<double>(repeated) / static_cast<double>(total);
    }
    out[day] = fraction;
    seen_nodes.insert(active_nodes.begin(), active_nodes.end());
    seen_links.insert(active_links.begin(), active_links.end());
    first = false;
  }
  return out;
}

}  // namespace mentionnet
