#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mentionnet/graph.hpp"

namespace mentionnet {

// Compact adjacency of the undirected simple projection. Node i corresponds
// to ids[i]; ids are ascending so lookups are binary searches.
class AdjacencyIndex {
 public:
  explicit AdjacencyIndex(const InteractionGraph& g);

  std::size_t size() const { return ids_.size(); }
  std::size_t edge_count() const { return neighbors_.size() / 2; }
  UserId id(std::uint32_t index) const { return ids_[index]; }
  const std::vector<UserId>& ids() const { return ids_; }
  std::optional<std::uint32_t> index_of(UserId id) const;

  std::uint32_t degree(std::uint32_t i) const { return offsets_[i + 1] - offsets_[i]; }
  std::uint32_t in_degree(std::uint32_t i) const { return in_degree_[i]; }
  std::uint32_t out_degree(std::uint32_t i) const { return out_degree_[i]; }
  // Sorted ascending.
  std::span<const std::uint32_t> neighbors(std::uint32_t i) const {
    return {neighbors_.data() + offsets_[i], degree(i)};
  }

 private:
  std::vector<UserId> ids_;
  std::vector<std::uint32_t> offsets_;
  std::vector<std::uint32_t> neighbors_;
  std::vector<std::uint32_t> in_degree_;
  std::vector<std::uint32_t> out_degree_;
};

// m / (n(n-1)) directed, m / (n(n-1)/2) undirected, 0 when n <= 1.
double density(std::uint64_t n, std::uint64_t m, bool directed);

enum class DegreeKind { in, out, total, undirected };
std::string_view to_string(DegreeKind kind);

struct DegreeDistribution {
  std::map<std::uint64_t, std::uint64_t> histogram;  // degree -> node count
  std::uint64_t n = 0;
  DegreeKind kind = DegreeKind::undirected;

  double pmf(std::uint64_t k) const;
  double ccdf(std::uint64_t k) const;  // P(K >= k)
  double mean() const;
};

// Covers every node, isolates included (k = 0 bin).
DegreeDistribution degree_distribution(const InteractionGraph& g, DegreeKind kind);
// Per-node undirected degrees in node-id order.
std::vector<std::uint64_t> undirected_degrees(const InteractionGraph& g);

// Weak components, largest first; ties ordered by smallest member id.
// Each component lists its ids ascending.
std::vector<std::vector<UserId>> connected_components(const InteractionGraph& g);

struct EccentricityResult {
  std::map<UserId, std::uint32_t> eccentricity;
  std::uint32_t radius = 0;
  std::uint32_t diameter = 0;
};

// Exact BFS from every member of `component`, restricted to the subgraph it
// induces. Throws Error(disconnected) if some member cannot reach another,
// Error(unknown_node) for ids not in g.
EccentricityResult eccentricity_radius_diameter(std::span<const UserId> component,
                                                const InteractionGraph& g,
                                                std::size_t threads = 1);

// Triangles through each node, in AdjacencyIndex order.
std::vector<std::uint64_t> triangles_per_node(const AdjacencyIndex& index);
std::uint64_t triangle_count(const InteractionGraph& g);

// 2 T_i / (d_i (d_i - 1)); nodes with degree < 2 score 0.
double local_clustering(const InteractionGraph& g, UserId node);
// Mean over all nodes. Throws Error(empty_input) on an empty graph.
double average_clustering(const InteractionGraph& g);
// 3 * triangles / connected triples; 0 when there are no triples.
double transitivity(const InteractionGraph& g);

struct MetricsReport {
  std::uint64_t nodes_directed = 0;
  std::uint64_t links_directed = 0;
  double density_directed = 0;
  std::uint64_t nodes_undirected = 0;
  std::uint64_t links_undirected = 0;
  double density_undirected = 0;
  std::uint64_t lcc_nodes = 0;
  std::uint64_t lcc_links = 0;
  double lcc_density = 0;
  std::optional<std::uint32_t> lcc_radius;  // absent for an empty graph
  std::optional<std::uint32_t> lcc_diameter;
  std::uint64_t component_count = 0;
  std::uint64_t isolate_count = 0;
  double avg_degree_directed = 0;    // links_directed / nodes
  double avg_degree_undirected = 0;  // 2 links_undirected / nodes
  double avg_clustering_undirected = 0;
  double transitivity = 0;
  std::uint64_t triangle_count = 0;
  std::uint64_t connected_triples = 0;

  bool operator==(const MetricsReport&) const = default;
};

// Radius and diameter are measured on the largest component only. The
// result does not depend on `threads`.
MetricsReport full_report(const InteractionGraph& g, std::size_t threads = 1);

}  // namespace mentionnet
