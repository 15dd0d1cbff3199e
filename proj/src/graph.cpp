#include "mentionnet/graph.hpp"

#include <algorithm>
#include <ostream>
#include <unordered_map>

namespace mentionnet {

std::vector<MentionEvent> extract_events(const TweetRecord& record, EdgeMode mode) {
  std::vector<MentionEvent> events;
  const auto make = [&](UserId source) {
    return MentionEvent{source, record.author_id, record.tweet_id, record.created_at};
  };
  if (mode == EdgeMode::root_only) {
    for (auto it = record.mention_ids.rbegin(); it != record.mention_ids.rend(); ++it) {
      if (*it != record.author_id) {
        events.push_back(make(*it));
        break;
      }
    }
    return events;
  }
  std::vector<UserId> seen;
  for (UserId id : record.mention_ids) {
    if (id == record.author_id) continue;
    if (std::find(seen.begin(), seen.end(), id) != seen.end()) continue;
    seen.push_back(id);
    events.push_back(make(id));
  }
  return events;
}

void InteractionGraph::add_event(const MentionEvent& event) {
  if (event.source == event.target) return;
  nodes_.insert(event.source);
  nodes_.insert(event.target);
  ++directed_[DirectedEdge{event.source, event.target}];
  ++weights_[UndirectedEdge::of(event.source, event.target)];
  events_.push_back(event);
}

void InteractionGraph::add_record(const TweetRecord& record, EdgeMode mode) {
  add_node(record.author_id);
  for (const auto& e : extract_events(record, mode)) add_event(e);
}

std::uint64_t InteractionGraph::total_weight() const {
  std::uint64_t total = 0;
  for (const auto& [edge, w] : weights_) total += w;
  return total;
}

bool InteractionGraph::same_structure(const InteractionGraph& other) const {
  return nodes_ == other.nodes_ && directed_ == other.directed_ && weights_ == other.weights_;
}

InteractionGraph build_graph(const std::vector<TweetRecord>& records, EdgeMode mode) {
  InteractionGraph g;
  for (const auto& r : records) g.add_record(r, mode);
  return g;
}

InteractionGraph merge(const InteractionGraph& a, const InteractionGraph& b) {
  InteractionGraph out = a;
  out.nodes_.insert(b.nodes_.begin(), b.nodes_.end());
  for (const auto& [edge, count] : b.directed_) out.directed_[edge] += count;
  for (const auto& [edge, count] : b.weights_) out.weights_[edge] += count;
  out.events_.insert(out.events_.end(), b.events_.begin(), b.events_.end());
  return out;
}

void write_edge_list_csv(const InteractionGraph& g, std::ostream& out) {
  out << "source,target,weight\n";
  for (const auto& [edge, count] : g.directed_edges()) {
    out << edge.source << ',' << edge.target << ',' << count << '\n';
  }
}

void write_node_list_csv(const InteractionGraph& g, std::ostream& out) {
  std::unordered_map<UserId, std::uint64_t> degree, in_degree, out_degree;
  for (const auto& [edge, w] : g.edge_weights()) {
    ++degree[edge.low];
    ++degree[edge.high];
  }
  for (const auto& [edge, count] : g.directed_edges()) {
    ++out_degree[edge.source];
    ++in_degree[edge.target];
  }
  out << "node_id,degree,in_degree,out_degree\n";
  for (UserId id : g.nodes()) {
    out << id << ',' << degree[id] << ',' << in_degree[id] << ',' << out_degree[id] << '\n';
  }
}

void write_dot(const InteractionGraph& g, std::ostream& out) {
  out << "digraph mentions {\n";
  for (UserId id : g.nodes()) out << "  \"" << id << "\";\n";
  for (const auto& [edge, count] : g.directed_edges()) {
    out << "  \"" << edge.source << "\" -> \"" << edge.target << "\" [weight=" << count << "];\n";
  }
  out << "}\n";
}

}  // namespace mentionnet
