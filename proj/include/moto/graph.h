#ifndef MOTO_GRAPH_H_
#define MOTO_GRAPH_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace moto {

// Dense node index. Indices follow ascending scholar-id order, so "smallest
// id" and "smallest index" mean the same thing everywhere in the library.
using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

inline constexpr NodeId kInvalidNode = static_cast<NodeId>(-1);

struct NodeAttributes {
  std::string scholar_id;
  std::uint32_t paper_count = 0;          // pn_i within the window
  std::vector<std::string> institutions;  // sorted, unique
  std::uint64_t citation_sum = 0;
};

// Edge endpoints by scholar id; used only at construction time.
struct EdgeSpec {
  std::string a;
  std::string b;
  std::uint32_t co_count = 1;
  double distance = 0.0;
};

struct Edge {
  NodeId u;  // u < v
  NodeId v;
  std::uint32_t co_count;
  double distance;
};

// Immutable weighted undirected graph of scholars. Each edge is stored once
// (u < v) and mirrored in a CSR adjacency whose rows are sorted by
// neighbour index.
class CollaborationGraph {
 public:
  CollaborationGraph() = default;

  // Throws std::invalid_argument on duplicate node ids, unknown endpoints,
  // self-loops, duplicate edges, zero co-counts or negative/non-finite
  // distances.
  static CollaborationGraph Create(std::vector<NodeAttributes> nodes,
                                   std::vector<EdgeSpec> edges);

  // Same as Create but with endpoints given as dense indices into `nodes`
  // after sorting; `nodes` must already be sorted by scholar id.
  static CollaborationGraph FromSortedNodes(std::vector<NodeAttributes> nodes,
                                            std::vector<Edge> edges);

  std::size_t num_nodes() const { return nodes_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return nodes_.empty(); }

  const NodeAttributes& node(NodeId v) const { return nodes_[v]; }
  const std::vector<NodeAttributes>& nodes() const { return nodes_; }
  const std::string& scholar_id(NodeId v) const { return nodes_[v].scholar_id; }
  std::optional<NodeId> Find(std::string_view scholar_id) const;

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[e]; }

  std::size_t degree(NodeId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const NodeId> neighbors(NodeId v) const {
    return {neighbors_.data() + offsets_[v], degree(v)};
  }
  // Edge ids aligned with neighbors(v).
  std::span<const EdgeId> incident_edges(NodeId v) const {
    return {edge_ids_.data() + offsets_[v], degree(v)};
  }

  std::optional<EdgeId> FindEdge(NodeId a, NodeId b) const;
  bool HasEdge(NodeId a, NodeId b) const { return FindEdge(a, b).has_value(); }

  // Subgraph induced by `keep` (any order, duplicates ignored).
  CollaborationGraph InducedSubgraph(std::span<const NodeId> keep) const;

  friend bool operator==(const CollaborationGraph& x,
                         const CollaborationGraph& y);

 private:
  void BuildAdjacency();

  std::vector<NodeAttributes> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<NodeId> neighbors_;
  std::vector<EdgeId> edge_ids_;
};

bool operator==(const NodeAttributes& x, const NodeAttributes& y);

// Component label per node (labels numbered by smallest member index).
std::vector<NodeId> ConnectedComponents(const CollaborationGraph& graph,
                                        std::size_t* num_components = nullptr);

}  // namespace moto

#endif  // MOTO_GRAPH_H_
