#include "moto/distance.h"

#include <algorithm>
#include <functional>
#include <ostream>
#include <queue>
#include <stdexcept>
#include <string>

#include "moto/format.h"
#include "moto/parallel.h"

namespace moto {

double EdgeDistance(std::uint32_t co_count, std::uint32_t papers_i,
                    std::uint32_t papers_j) {
  if (co_count == 0 || co_count > papers_i || co_count > papers_j) {
    throw std::invalid_argument(
        "inconsistent paper counts: cot=" + std::to_string(co_count) +
        " pn_i=" + std::to_string(papers_i) +
        " pn_j=" + std::to_string(papers_j));
  }
  const double union_size = static_cast<double>(papers_i) + papers_j - co_count;
  return 1.0 - co_count / union_size;
}

namespace {

// Reusable scratch space so all-pairs runs do not reallocate per source.
struct SsspWorkspace {
  std::vector<double> dist;
  std::vector<NodeId> touched;

  explicit SsspWorkspace(std::size_t n) : dist(n, kInfinity) {}
};

std::vector<DistanceEntry> RunSssp(const CollaborationGraph& graph,
                                   NodeId source, double cap,
                                   SsspWorkspace& ws) {
  using Item = std::pair<double, NodeId>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  ws.dist[source] = 0.0;
  ws.touched.push_back(source);
  heap.emplace(0.0, source);
  std::vector<DistanceEntry> out;
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (d > ws.dist[v]) continue;
    out.push_back({v, d});
    auto nbrs = graph.neighbors(v);
    auto eids = graph.incident_edges(v);
    for (std::size_t k = 0; k < nbrs.size(); ++k) {
      const double nd = d + graph.edge(eids[k]).distance;
      if (nd > cap) continue;
      NodeId u = nbrs[k];
      if (nd < ws.dist[u]) {
        if (ws.dist[u] == kInfinity) ws.touched.push_back(u);
        ws.dist[u] = nd;
        heap.emplace(nd, u);
      }
    }
  }
  for (NodeId v : ws.touched) ws.dist[v] = kInfinity;
  ws.touched.clear();
  std::sort(out.begin(), out.end(),
            [](const DistanceEntry& a, const DistanceEntry& b) {
              return a.target < b.target;
            });
  return out;
}

double Lookup(std::span<const DistanceEntry> row, NodeId target) {
  auto it = std::lower_bound(
      row.begin(), row.end(), target,
      [](const DistanceEntry& e, NodeId t) { return e.target < t; });
  if (it == row.end() || it->target != target) return kInfinity;
  return it->distance;
}

}  // namespace

std::vector<DistanceEntry> BoundedSssp(const CollaborationGraph& graph,
                                       NodeId source, double cap) {
  if (source >= graph.num_nodes()) {
    throw std::invalid_argument("unknown source node " +
                                std::to_string(source));
  }
  if (!(cap > 0.0)) throw std::invalid_argument("distance cap must be > 0");
  SsspWorkspace ws(graph.num_nodes());
  return RunSssp(graph, source, cap, ws);
}

DistanceIndex::DistanceIndex(std::vector<std::vector<DistanceEntry>> rows,
                             double cap)
    : rows_(std::move(rows)), cap_(cap) {}

double DistanceIndex::Distance(NodeId a, NodeId b) const {
  if (a >= rows_.size()) return kInfinity;
  return Lookup(rows_[a], b);
}

std::size_t DistanceIndex::num_entries() const {
  std::size_t total = 0;
  for (const auto& r : rows_) total += r.size();
  return total;
}

bool operator==(const DistanceIndex& x, const DistanceIndex& y) {
  if (x.cap_ != y.cap_ || x.rows_.size() != y.rows_.size()) return false;
  for (std::size_t i = 0; i < x.rows_.size(); ++i) {
    const auto& a = x.rows_[i];
    const auto& b = y.rows_[i];
    if (a.size() != b.size()) return false;
    for (std::size_t k = 0; k < a.size(); ++k) {
      if (a[k].target != b[k].target || a[k].distance != b[k].distance) {
        return false;
      }
    }
  }
  return true;
}

DistanceIndex AllPairs(const CollaborationGraph& graph, double cap,
                       unsigned workers) {
  if (!(cap > 0.0)) throw std::invalid_argument("distance cap must be > 0");
  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<DistanceEntry>> rows(n);
  const std::size_t threads = std::max(1u, workers);
  std::vector<SsspWorkspace> spaces;
  // One workspace per source chunk; each chunk is owned by a single call.
  const std::size_t chunks = std::min<std::size_t>(threads * 8, n);
  spaces.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) spaces.emplace_back(n);
  ParallelFor(chunks, workers, [&](std::size_t c) {
    for (std::size_t s = c; s < n; s += chunks) {
      rows[s] = RunSssp(graph, static_cast<NodeId>(s), cap, spaces[c]);
    }
  });

  // Floating-point path sums depend on the summation direction, so dis(i,j)
  // and dis(j,i) may differ in the last bit or straddle the cap. Canonicalise
  // every pair to the value computed from its lower endpoint (falling back to
  // the higher one when only that side found it within the cap).
  std::vector<std::vector<DistanceEntry>> sym(n);
  for (NodeId i = 0; i < n; ++i) {
    for (const DistanceEntry& e : rows[i]) {
      const NodeId j = e.target;
      if (j == i) {
        sym[i].push_back(e);
      } else if (i < j) {
        sym[i].push_back(e);
        sym[j].push_back({i, e.distance});
      } else if (Lookup(rows[j], i) == kInfinity) {
        sym[i].push_back(e);
        sym[j].push_back({i, e.distance});
      }
    }
  }
  for (auto& row : sym) {
    std::sort(row.begin(), row.end(),
              [](const DistanceEntry& a, const DistanceEntry& b) {
                return a.target < b.target;
              });
  }
  return DistanceIndex(std::move(sym), cap);
}

void WriteDistanceCsv(const CollaborationGraph& graph,
                      const DistanceIndex& index, std::ostream& out) {
  out << "source,target,distance\n";
  // Rows are index-ordered, which is scholar-id order.
  for (NodeId s = 0; s < index.num_nodes(); ++s) {
    for (const DistanceEntry& e : index.row(s)) {
      out << graph.scholar_id(s) << ',' << graph.scholar_id(e.target) << ','
          << FormatFixed(e.distance, 9) << '\n';
    }
  }
}

}  // namespace moto
