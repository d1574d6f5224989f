#include "moto/graph.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace moto {

bool operator==(const NodeAttributes& x, const NodeAttributes& y) {
  return x.scholar_id == y.scholar_id && x.paper_count == y.paper_count &&
         x.institutions == y.institutions && x.citation_sum == y.citation_sum;
}

CollaborationGraph CollaborationGraph::Create(std::vector<NodeAttributes> nodes,
                                              std::vector<EdgeSpec> edges) {
  std::sort(nodes.begin(), nodes.end(),
            [](const NodeAttributes& a, const NodeAttributes& b) {
              return a.scholar_id < b.scholar_id;
            });
  std::unordered_map<std::string_view, NodeId> index;
  index.reserve(nodes.size());
  for (NodeId v = 0; v < nodes.size(); ++v) {
    if (!index.emplace(nodes[v].scholar_id, v).second) {
      throw std::invalid_argument("duplicate scholar id: " +
                                  nodes[v].scholar_id);
    }
  }
  std::vector<Edge> dense;
  dense.reserve(edges.size());
  for (const EdgeSpec& e : edges) {
    auto ia = index.find(e.a);
    auto ib = index.find(e.b);
    if (ia == index.end() || ib == index.end()) {
      throw std::invalid_argument("edge references unknown scholar: " + e.a +
                                  " - " + e.b);
    }
    dense.push_back({ia->second, ib->second, e.co_count, e.distance});
  }
  // `index` holds views into `nodes`; the move below keeps the heap buffers.
  return FromSortedNodes(std::move(nodes), std::move(dense));
}

CollaborationGraph CollaborationGraph::FromSortedNodes(
    std::vector<NodeAttributes> nodes, std::vector<Edge> edges) {
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (!(nodes[i - 1].scholar_id < nodes[i].scholar_id)) {
      throw std::invalid_argument("nodes not strictly sorted by scholar id");
    }
  }
  for (Edge& e : edges) {
    if (e.u >= nodes.size() || e.v >= nodes.size()) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (e.u == e.v) {
      throw std::invalid_argument("self-loop on " + nodes[e.u].scholar_id);
    }
    if (e.co_count == 0) {
      throw std::invalid_argument("edge with zero co-authorship count");
    }
    if (!std::isfinite(e.distance) || e.distance < 0.0) {
      throw std::invalid_argument("edge distance must be finite and >= 0");
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  });
  for (std::size_t i = 1; i < edges.size(); ++i) {
    if (edges[i].u == edges[i - 1].u && edges[i].v == edges[i - 1].v) {
      throw std::invalid_argument("duplicate edge " +
                                  nodes[edges[i].u].scholar_id + " - " +
                                  nodes[edges[i].v].scholar_id);
    }
  }
  for (NodeAttributes& n : nodes) {
    std::sort(n.institutions.begin(), n.institutions.end());
    n.institutions.erase(
        std::unique(n.institutions.begin(), n.institutions.end()),
        n.institutions.end());
  }
  CollaborationGraph g;
  g.nodes_ = std::move(nodes);
  g.edges_ = std::move(edges);
  g.BuildAdjacency();
  return g;
}

void CollaborationGraph::BuildAdjacency() {
  const std::size_t n = nodes_.size();
  std::vector<std::size_t> deg(n, 0);
  for (const Edge& e : edges_) {
    ++deg[e.u];
    ++deg[e.v];
  }
  offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + deg[v];
  neighbors_.assign(offsets_[n], 0);
  edge_ids_.assign(offsets_[n], 0);
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId id = 0; id < edges_.size(); ++id) {
    const Edge& e = edges_[id];
    neighbors_[cursor[e.u]] = e.v;
    edge_ids_[cursor[e.u]++] = id;
    neighbors_[cursor[e.v]] = e.u;
    edge_ids_[cursor[e.v]++] = id;
  }
  // Edges are sorted by (u, v): rows of the lower endpoint fill in order, but
  // rows filled from the higher endpoint need an explicit sort.
  std::vector<std::pair<NodeId, EdgeId>> row;
  for (std::size_t v = 0; v < n; ++v) {
    row.clear();
    for (std::size_t k = offsets_[v]; k < offsets_[v + 1]; ++k) {
      row.emplace_back(neighbors_[k], edge_ids_[k]);
    }
    std::sort(row.begin(), row.end());
    for (std::size_t k = 0; k < row.size(); ++k) {
      neighbors_[offsets_[v] + k] = row[k].first;
      edge_ids_[offsets_[v] + k] = row[k].second;
    }
  }
}

std::optional<NodeId> CollaborationGraph::Find(
    std::string_view scholar_id) const {
  auto it = std::lower_bound(
      nodes_.begin(), nodes_.end(), scholar_id,
      [](const NodeAttributes& n, std::string_view id) {
        return n.scholar_id < id;
      });
  if (it == nodes_.end() || it->scholar_id != scholar_id) return std::nullopt;
  return static_cast<NodeId>(it - nodes_.begin());
}

std::optional<EdgeId> CollaborationGraph::FindEdge(NodeId a, NodeId b) const {
  if (a >= num_nodes() || b >= num_nodes()) return std::nullopt;
  if (degree(a) > degree(b)) std::swap(a, b);
  auto row = neighbors(a);
  auto it = std::lower_bound(row.begin(), row.end(), b);
  if (it == row.end() || *it != b) return std::nullopt;
  return incident_edges(a)[it - row.begin()];
}

CollaborationGraph CollaborationGraph::InducedSubgraph(
    std::span<const NodeId> keep) const {
  std::vector<NodeId> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<NodeId> remap(num_nodes(), kInvalidNode);
  std::vector<NodeAttributes> nodes;
  nodes.reserve(sorted.size());
  for (NodeId v : sorted) {
    remap[v] = static_cast<NodeId>(nodes.size());
    nodes.push_back(nodes_[v]);
  }
  std::vector<Edge> edges;
  for (const Edge& e : edges_) {
    if (remap[e.u] != kInvalidNode && remap[e.v] != kInvalidNode) {
      edges.push_back({remap[e.u], remap[e.v], e.co_count, e.distance});
    }
  }
  return FromSortedNodes(std::move(nodes), std::move(edges));
}

bool operator==(const CollaborationGraph& x, const CollaborationGraph& y) {
  if (x.nodes_ != y.nodes_ || x.edges_.size() != y.edges_.size()) return false;
  for (std::size_t i = 0; i < x.edges_.size(); ++i) {
    const Edge& a = x.edges_[i];
    const Edge& b = y.edges_[i];
    if (a.u != b.u || a.v != b.v || a.co_count != b.co_count ||
        a.distance != b.distance) {
      return false;
    }
  }
  return true;
}

std::vector<NodeId> ConnectedComponents(const CollaborationGraph& graph,
                                        std::size_t* num_components) {
  const std::size_t n = graph.num_nodes();
  std::vector<NodeId> label(n, kInvalidNode);
  std::vector<NodeId> stack;
  NodeId next = 0;
  for (NodeId s = 0; s < n; ++s) {
    if (label[s] != kInvalidNode) continue;
    label[s] = next;
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      for (NodeId u : graph.neighbors(v)) {
        if (label[u] == kInvalidNode) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  if (num_components != nullptr) *num_components = next;
  return label;
}

}  // namespace moto
