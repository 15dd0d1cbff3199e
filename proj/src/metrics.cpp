#include "mentionnet/metrics.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mentionnet/parallel.hpp"

namespace mentionnet {
namespace {

constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// Components as index lists, largest first, ties by smallest index.
std::vector<std::vector<std::uint32_t>> components_of(const AdjacencyIndex& index) {
  const auto n = static_cast<std::uint32_t>(index.size());
  std::vector<bool> visited(n, false);
  std::vector<std::vector<std::uint32_t>> comps;
  std::vector<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < n; ++s) {
    if (visited[s]) continue;
    queue.assign(1, s);
    visited[s] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (auto v : index.neighbors(queue[head])) {
        if (!visited[v]) {
          visited[v] = true;
          queue.push_back(v);
        }
      }
    }
    std::sort(queue.begin(), queue.end());
    comps.push_back(queue);
  }
  std::stable_sort(comps.begin(), comps.end(),
                   [](const auto& a, const auto& b) { return a.size() > b.size(); });
  return comps;
}

// Eccentricity of each member within the subgraph induced by `members`;
// kUnreached marks a source that cannot see every member.
std::vector<std::uint32_t> eccentricities(const AdjacencyIndex& index,
                                          const std::vector<std::uint32_t>& members,
                                          std::size_t threads) {
  std::vector<std::uint8_t> in_set(index.size(), 0);
  for (auto m : members) in_set[m] = 1;
  std::vector<std::uint32_t> ecc(members.size(), 0);
  parallel_blocks(members.size(), threads, [&](std::size_t, std::size_t begin, std::size_t end) {
    std::vector<std::uint32_t> dist(index.size(), kUnreached);
    std::vector<std::uint32_t> queue;
    queue.reserve(members.size());
    for (std::size_t i = begin; i < end; ++i) {
      const auto source = members[i];
      queue.assign(1, source);
      dist[source] = 0;
      std::uint32_t farthest = 0;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto u = queue[head];
        const auto du = dist[u];
        farthest = du;
        for (auto v : index.neighbors(u)) {
          if (in_set[v] && dist[v] == kUnreached) {
            dist[v] = du + 1;
            queue.push_back(v);
          }
        }
      }
      ecc[i] = queue.size() == members.size() ? farthest : kUnreached;
      for (auto v : queue) dist[v] = kUnreached;
    }
  });
  return ecc;
}

}  // namespace

AdjacencyIndex::AdjacencyIndex(const InteractionGraph& g)
    : ids_(g.nodes().begin(), g.nodes().end()) {
  const auto n = ids_.size();
  in_degree_.assign(n, 0);
  out_degree_.assign(n, 0);
  offsets_.assign(n + 1, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> pairs;
  pairs.reserve(g.undirected_edge_count());
  for (const auto& [edge, w] : g.edge_weights()) {
    const auto a = *index_of(edge.low);
    const auto b = *index_of(edge.high);
    pairs.emplace_back(a, b);
    ++offsets_[a + 1];
    ++offsets_[b + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(offsets_.back());
  std::vector<std::uint32_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (auto [a, b] : pairs) {
    neighbors_[cursor[a]++] = b;
    neighbors_[cursor[b]++] = a;
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::sort(neighbors_.begin() + offsets_[i], neighbors_.begin() + offsets_[i + 1]);
  }
  for (const auto& [edge, count] : g.directed_edges()) {
    ++out_degree_[*index_of(edge.source)];
    ++in_degree_[*index_of(edge.target)];
  }
}

std::optional<std::uint32_t> AdjacencyIndex::index_of(UserId id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<std::uint32_t>(it - ids_.begin());
}

double density(std::uint64_t n, std::uint64_t m, bool directed) {
  if (n <= 1) return 0.0;
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1);
  return static_cast<double>(m) / (directed ? pairs : pairs / 2.0);
}

std::string_view to_string(DegreeKind kind) {
  switch (kind) {
    case DegreeKind::in: return "in";
    case DegreeKind::out: return "out";
    case DegreeKind::total: return "total";
    case DegreeKind::undirected: return "undirected";
  }
  return "undirected";
}

double DegreeDistribution::pmf(std::uint64_t k) const {
  if (n == 0) return 0.0;
  auto it = histogram.find(k);
  return it == histogram.end() ? 0.0 : static_cast<double>(it->second) / static_cast<double>(n);
}

double DegreeDistribution::ccdf(std::uint64_t k) const {
  if (n == 0) return 0.0;
  std::uint64_t at_least = 0;
  for (auto it = histogram.lower_bound(k); it != histogram.end(); ++it) at_least += it->second;
  return static_cast<double>(at_least) / static_cast<double>(n);
}

double DegreeDistribution::mean() const {
  if (n == 0) return 0.0;
  double sum = 0;
  for (const auto& [k, count] : histogram) sum += static_cast<double>(k) * static_cast<double>(count);
  return sum / static_cast<double>(n);
}

DegreeDistribution degree_distribution(const InteractionGraph& g, DegreeKind kind) {
  const AdjacencyIndex index(g);
  DegreeDistribution dist;
  dist.kind = kind;
  dist.n = index.size();
  for (std::uint32_t i = 0; i < index.size(); ++i) {
    std::uint64_t k = 0;
    switch (kind) {
      case DegreeKind::in: k = index.in_degree(i); break;
      case DegreeKind::out: k = index.out_degree(i); break;
      case DegreeKind::total: k = index.in_degree(i) + index.out_degree(i); break;
      case DegreeKind::undirected: k = index.degree(i); break;
    }
    ++dist.histogram[k];
  }
  return dist;
}

std::vector<std::uint64_t> undirected_degrees(const InteractionGraph& g) {
  const AdjacencyIndex index(g);
  std::vector<std::uint64_t> out(index.size());
  for (std::uint32_t i = 0; i < index.size(); ++i) out[i] = index.degree(i);
  return out;
}

std::vector<std::vector<UserId>> connected_components(const InteractionGraph& g) {
  const AdjacencyIndex index(g);
  std::vector<std::vector<UserId>> out;
  for (const auto& comp : components_of(index)) {
    std::vector<UserId> ids;
    ids.reserve(comp.size());
    for (auto i : comp) ids.push_back(index.id(i));
    out.push_back(std::move(ids));
  }
  return out;
}

EccentricityResult eccentricity_radius_diameter(std::span<const UserId> component,
                                                const InteractionGraph& g,
                                                std::size_t threads) {
  if (component.empty()) throw Error(ErrorKind::invalid_argument, "component is empty");
  const AdjacencyIndex index(g);
  std::vector<std::uint32_t> members;
  members.reserve(component.size());
  for (UserId id : component) {
    auto i = index.index_of(id);
    if (!i) throw Error(ErrorKind::unknown_node, "node " + std::to_string(id) + " is not in the graph");
    members.push_back(*i);
  }
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());

  const auto ecc = eccentricities(index, members, threads);
  EccentricityResult result;
  result.radius = kUnreached;
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (ecc[i] == kUnreached) {
      throw Error(ErrorKind::disconnected, "component is not connected (infinite eccentricity)");
    }
    result.eccentricity[index.id(members[i])] = ecc[i];
    result.radius = std::min(result.radius, ecc[i]);
    result.diameter = std::max(result.diameter, ecc[i]);
  }
  return result;
}

std::vector<std::uint64_t> triangles_per_node(const AdjacencyIndex& index) {
  std::vector<std::uint64_t> tri(index.size(), 0);
  for (std::uint32_t u = 0; u < index.size(); ++u) {
    const auto nu = index.neighbors(u);
    for (auto v : nu) {
      if (v <= u) continue;
      // Count each triangle once as u < v < w.
      const auto nv = index.neighbors(v);
      auto a = std::upper_bound(nu.begin(), nu.end(), v);
      auto b = std::upper_bound(nv.begin(), nv.end(), v);
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++tri[u];
          ++tri[v];
          ++tri[*a];
          ++a;
          ++b;
        }
      }
    }
  }
  return tri;
}

std::uint64_t triangle_count(const InteractionGraph& g) {
  const auto tri = triangles_per_node(AdjacencyIndex(g));
  return std::accumulate(tri.begin(), tri.end(), std::uint64_t{0}) / 3;
}

namespace {

double clustering_of(std::uint64_t triangles, std::uint64_t degree) {
  if (degree < 2) return 0.0;
  return 2.0 * static_cast<double>(triangles) /
         (static_cast<double>(degree) * static_cast<double>(degree - 1));
}

std::uint64_t triples_of(const AdjacencyIndex& index) {
  std::uint64_t triples = 0;
  for (std::uint32_t i = 0; i < index.size(); ++i) {
    const std::uint64_t d = index.degree(i);
    if (d >= 2) triples += d * (d - 1) / 2;
  }
  return triples;
}

double mean_clustering(const AdjacencyIndex& index, const std::vector<std::uint64_t>& tri) {
  double sum = 0;
  for (std::uint32_t i = 0; i < index.size(); ++i) sum += clustering_of(tri[i], index.degree(i));
  return sum / static_cast<double>(index.size());
}

}  // namespace

double local_clustering(const InteractionGraph& g, UserId node) {
  const AdjacencyIndex index(g);
  auto i = index.index_of(node);
  if (!i) throw Error(ErrorKind::unknown_node, "node " + std::to_string(node) + " is not in the graph");
  const auto tri = triangles_per_node(index);
  return clustering_of(tri[*i], index.degree(*i));
}

double average_clustering(const InteractionGraph& g) {
  if (g.empty()) throw Error(ErrorKind::empty_input, "average clustering of an empty graph");
  const AdjacencyIndex index(g);
  return mean_clustering(index, triangles_per_node(index));
}

double transitivity(const InteractionGraph& g) {
  const AdjacencyIndex index(g);
  const auto triples = triples_of(index);
  if (triples == 0) return 0.0;
  const auto tri = triangles_per_node(index);
  const auto triangles = std::accumulate(tri.begin(), tri.end(), std::uint64_t{0}) / 3;
  return 3.0 * static_cast<double>(triangles) / static_cast<double>(triples);
}

MetricsReport full_report(const InteractionGraph& g, std::size_t threads) {
  MetricsReport r;
  if (g.empty()) return r;
  const AdjacencyIndex index(g);
  const std::uint64_t n = index.size();

  r.nodes_directed = n;
  r.nodes_undirected = n;
  r.links_directed = g.directed_edge_count();
  r.links_undirected = g.undirected_edge_count();
  r.density_directed = density(n, r.links_directed, true);
  r.density_undirected = density(n, r.links_undirected, false);
  r.avg_degree_directed = static_cast<double>(r.links_directed) / static_cast<double>(n);
  r.avg_degree_undirected = 2.0 * static_cast<double>(r.links_undirected) / static_cast<double>(n);

  const auto comps = components_of(index);
  r.component_count = comps.size();
  for (const auto& c : comps) {
    if (c.size() == 1 && index.degree(c.front()) == 0) ++r.isolate_count;
  }
  const auto& lcc = comps.front();
  std::uint64_t lcc_degree_sum = 0;
  for (auto i : lcc) lcc_degree_sum += index.degree(i);
  r.lcc_nodes = lcc.size();
  r.lcc_links = lcc_degree_sum / 2;
  r.lcc_density = density(r.lcc_nodes, r.lcc_links, false);

  const auto ecc = eccentricities(index, lcc, threads);
  r.lcc_radius = *std::min_element(ecc.begin(), ecc.end());
  r.lcc_diameter = *std::max_element(ecc.begin(), ecc.end());

  const auto tri = triangles_per_node(index);
  r.triangle_count = std::accumulate(tri.begin(), tri.end(), std::uint64_t{0}) / 3;
  r.connected_triples = triples_of(index);
  r.avg_clustering_undirected = mean_clustering(index, tri);
  r.transitivity = r.connected_triples == 0
                       ? 0.0
                       : 3.0 * static_cast<double>(r.triangle_count) /
                             static_cast<double>(r.connected_triples);
  return r;
}

}  // namespace mentionnet
