#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "mentionnet/ingest.hpp"
#include "mentionnet/types.hpp"

namespace mentionnet {

// One occurrence of influence: `source` was mentioned by `target` (the author).
struct MentionEvent {
  UserId source = 0;
  UserId target = 0;
  TweetId tweet_id = 0;
  Timestamp timestamp{};

  bool operator==(const MentionEvent&) const = default;
};

struct DirectedEdge {
  UserId source = 0;
  UserId target = 0;
  auto operator<=>(const DirectedEdge&) const = default;
};

// Endpoints stored low id first.
struct UndirectedEdge {
  UserId low = 0;
  UserId high = 0;

  static UndirectedEdge of(UserId a, UserId b) { return a < b ? UndirectedEdge{a, b} : UndirectedEdge{b, a}; }
  auto operator<=>(const UndirectedEdge&) const = default;
};

// RootOnly: one event from the last non-self mention (the original source of
// a retweet chain). AllMentions: one event per distinct non-self mention.
std::vector<MentionEvent> extract_events(const TweetRecord& record, EdgeMode mode);

// Mention multigraph with directed, undirected and weighted projections.
// Ordered containers keep every traversal deterministic.
class InteractionGraph {
 public:
  void add_node(UserId id) { nodes_.insert(id); }
  void add_event(const MentionEvent& event);
  void add_record(const TweetRecord& record, EdgeMode mode);

  const std::set<UserId>& nodes() const { return nodes_; }
  // Directed pair -> number of events with exactly that direction.
  const std::map<DirectedEdge, std::uint64_t>& directed_edges() const { return directed_; }
  // Unordered pair -> number of events in either direction.
  const std::map<UndirectedEdge, std::uint64_t>& edge_weights() const { return weights_; }
  const std::vector<MentionEvent>& event_log() const { return events_; }

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t directed_edge_count() const { return directed_.size(); }
  std::size_t undirected_edge_count() const { return weights_.size(); }
  std::uint64_t total_weight() const;
  bool empty() const { return nodes_.empty(); }

  // Node, edge and weight equality; the event log is ignored.
  bool same_structure(const InteractionGraph& other) const;

  friend InteractionGraph merge(const InteractionGraph& a, const InteractionGraph& b);

 private:
  std::set<UserId> nodes_;
  std::map<DirectedEdge, std::uint64_t> directed_;
  std::map<UndirectedEdge, std::uint64_t> weights_;
  std::vector<MentionEvent> events_;
};

// Nodes are every author plus every event endpoint, so users whose tweets
// carry no usable mention remain as isolates.
InteractionGraph build_graph(const std::vector<TweetRecord>& records, EdgeMode mode);

// Unions nodes and edges and sums weights; the event log is a's followed by b's.
InteractionGraph merge(const InteractionGraph& a, const InteractionGraph& b);

// `source,target,weight` per directed edge, weight = directed event count.
void write_edge_list_csv(const InteractionGraph& g, std::ostream& out);
// `node_id,degree,in_degree,out_degree`; degree is on the undirected simple projection.
void write_node_list_csv(const InteractionGraph& g, std::ostream& out);
void write_dot(const InteractionGraph& g, std::ostream& out);

}  // namespace mentionnet
