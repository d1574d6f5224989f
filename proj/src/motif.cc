#include "moto/motif.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "json.hpp"
#include "moto/parallel.h"

namespace moto {

TriangleIndex TriangleIndex::Build(const CollaborationGraph& graph,
                                   unsigned workers) {
  const std::size_t n = graph.num_nodes();
  std::vector<std::vector<Triangle>> per_min(n);
  ParallelFor(n, workers, [&](std::size_t idx) {
    const NodeId v = static_cast<NodeId>(idx);
    auto nv = graph.neighbors(v);
    auto start = std::upper_bound(nv.begin(), nv.end(), v);
    for (auto it = start; it != nv.end(); ++it) {
      const NodeId u = *it;
      auto nu = graph.neighbors(u);
      // Walk both sorted rows from above u.
      auto a = std::upper_bound(it, nv.end(), u);
      auto b = std::upper_bound(nu.begin(), nu.end(), u);
      while (a != nv.end() && b != nu.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          per_min[idx].push_back({v, u, *a});
          ++a;
          ++b;
        }
      }
    }
  });

  TriangleIndex index;
  index.first_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    index.first_[v + 1] = index.first_[v] + per_min[v].size();
  }
  index.triangles_.reserve(index.first_[n]);
  for (auto& list : per_min) {
    index.triangles_.insert(index.triangles_.end(), list.begin(), list.end());
  }
  index.per_node_.assign(n, 0);
  index.partners_.assign(n, {});
  for (const Triangle& t : index.triangles_) {
    for (int k = 0; k < 3; ++k) {
      ++index.per_node_[t[k]];
      index.partners_[t[k]].push_back(t[(k + 1) % 3]);
      index.partners_[t[k]].push_back(t[(k + 2) % 3]);
    }
  }
  for (auto& p : index.partners_) {
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
  }
  return index;
}

bool TriangleIndex::PairInTriangle(NodeId a, NodeId b) const {
  if (a >= partners_.size()) return false;
  const auto& p = partners_[a];
  return std::binary_search(p.begin(), p.end(), b);
}

namespace {

std::uint32_t CountCommonExcluding(std::span<const NodeId> sorted_a,
                                   std::span<const NodeId> sorted_b,
                                   NodeId skip) {
  std::uint32_t count = 0;
  auto a = sorted_a.begin();
  auto b = sorted_b.begin();
  while (a != sorted_a.end() && b != sorted_b.end()) {
    if (*a < *b) {
      ++a;
    } else if (*b < *a) {
      ++b;
    } else {
      if (*a != skip) ++count;
      ++a;
      ++b;
    }
  }
  return count;
}

}  // namespace

std::uint32_t PairwiseFamiliarity(NodeId i, std::span<const NodeId> team,
                                  const CollaborationGraph& graph) {
  return CountCommonExcluding(graph.neighbors(i), team, i);
}

std::uint32_t HigherOrderFamiliarity(NodeId i, std::span<const NodeId> team,
                                     const TriangleIndex& triangles) {
  return CountCommonExcluding(triangles.partners(i), team, i);
}

std::uint32_t HigherOrderFamiliarityWithin(NodeId i,
                                           std::span<const NodeId> team,
                                           const CollaborationGraph& graph) {
  auto in_team = [&](NodeId v) {
    return std::binary_search(team.begin(), team.end(), v);
  };
  std::vector<NodeId> local;
  for (NodeId j : graph.neighbors(i)) {
    if (in_team(j)) local.push_back(j);
  }
  std::uint32_t count = 0;
  for (NodeId j : local) {
    if (j == i) continue;
    // j counts if some third member k is adjacent to both i and j.
    auto nj = graph.neighbors(j);
    bool found = false;
    for (NodeId k : local) {
      if (k != j && k != i && std::binary_search(nj.begin(), nj.end(), k)) {
        found = true;
        break;
      }
    }
    if (found) ++count;
  }
  return count;
}

CollaborationGraph RewirePreservingDegrees(const CollaborationGraph& graph,
                                           std::uint64_t seed,
                                           std::uint32_t swaps_per_edge) {
  if (swaps_per_edge < 1) {
    throw std::invalid_argument("swaps_per_edge must be >= 1");
  }
  const std::size_t m = graph.num_edges();
  if (m < 2) return graph;
  std::vector<Edge> edges = graph.edges();
  auto key = [](NodeId a, NodeId b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  std::unordered_set<std::uint64_t> present;
  present.reserve(m * 2);
  for (const Edge& e : edges) present.insert(key(e.u, e.v));

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, m - 1);
  std::bernoulli_distribution flip(0.5);
  const std::uint64_t attempts = static_cast<std::uint64_t>(swaps_per_edge) * m;
  for (std::uint64_t t = 0; t < attempts; ++t) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    const bool reverse = flip(rng);
    if (i == j) continue;
    const NodeId a = edges[i].u;
    const NodeId b = edges[i].v;
    NodeId c = edges[j].u;
    NodeId d = edges[j].v;
    if (reverse) std::swap(c, d);
    // (a,b),(c,d) -> (a,d),(c,b)
    if (a == d || c == b) continue;
    if (present.contains(key(a, d)) || present.contains(key(c, b))) continue;
    present.erase(key(a, b));
    present.erase(key(c, d));
    present.insert(key(a, d));
    present.insert(key(c, b));
    edges[i].v = d;
    edges[j].u = c;
    edges[j].v = b;
    if (edges[i].u > edges[i].v) std::swap(edges[i].u, edges[i].v);
    if (edges[j].u > edges[j].v) std::swap(edges[j].u, edges[j].v);
  }
  return CollaborationGraph::FromSortedNodes(graph.nodes(), std::move(edges));
}

MotifVerdict MotifSignificance(const CollaborationGraph& graph,
                               const MotifParams& params, unsigned workers) {
  if (params.replicates < 1) {
    throw std::invalid_argument("motif ensemble needs at least one replicate");
  }
  MotifVerdict v;
  v.f_real = TriangleIndex::Build(graph).size();
  v.replicate_counts.assign(params.replicates, 0);
  ParallelFor(params.replicates, workers, [&](std::size_t r) {
    CollaborationGraph random =
        RewirePreservingDegrees(graph, params.seed + r, params.swaps_per_edge);
    v.replicate_counts[r] = TriangleIndex::Build(random).size();
  });

  double sum = 0.0;
  std::size_t exceed = 0;
  for (std::uint64_t c : v.replicate_counts) {
    sum += static_cast<double>(c);
    if (c > v.f_real) ++exceed;
  }
  const double n = params.replicates;
  v.f_rand_mean = sum / n;
  double sq = 0.0;
  for (std::uint64_t c : v.replicate_counts) {
    const double diff = static_cast<double>(c) - v.f_rand_mean;
    sq += diff * diff;
  }
  v.f_rand_std = std::sqrt(sq / n);
  v.p_estimate = static_cast<double>(exceed) / n;

  const double f_real = static_cast<double>(v.f_real);
  v.significant = v.p_estimate <= params.p_threshold;
  v.frequent = params.frequency_rule == FrequencyRule::kAtLeast
                   ? f_real >= params.min_frequency
                   : f_real <= params.min_frequency;
  v.large_effect = f_real - v.f_rand_mean > params.effect_ratio * v.f_rand_mean;
  v.is_motif = v.significant && v.frequent && v.large_effect;
  return v;
}

void WriteVerdictJson(const MotifVerdict& verdict, const MotifParams& params,
                      std::ostream& out) {
  nlohmann::ordered_json j;
  j["f_real"] = verdict.f_real;
  j["f_rand_mean"] = verdict.f_rand_mean;
  j["f_rand_std"] = verdict.f_rand_std;
  j["p_estimate"] = verdict.p_estimate;
  j["conditions"] = {{"significance", verdict.significant},
                     {"frequency", verdict.frequent},
                     {"effect_size", verdict.large_effect}};
  j["is_motif"] = verdict.is_motif;
  j["params"] = {
      {"N", params.replicates},
      {"P", params.p_threshold},
      {"U", params.min_frequency},
      {"D", params.effect_ratio},
      {"seed", params.seed},
      {"swaps_per_edge", params.swaps_per_edge},
      {"frequency_rule", params.frequency_rule == FrequencyRule::kAtLeast
                             ? "at-least"
                             : "at-most"}};
  out << j.dump(2) << '\n';
}

void WriteEnsembleCsv(const MotifVerdict& verdict, std::ostream& out) {
  out << "replicate,triangles\n";
  for (std::size_t r = 0; r < verdict.replicate_counts.size(); ++r) {
    out << r << ',' << verdict.replicate_counts[r] << '\n';
  }
}

}  // namespace moto
