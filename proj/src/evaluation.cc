#include "moto/evaluation.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <ostream>
#include <queue>
#include <set>
#include <stdexcept>

#include "moto/distance.h"
#include "moto/format.h"

namespace moto {

CcrResult Ccr(std::span<const NodeId> members, const CollaborationGraph& graph,
              bool hop_count) {
  CcrResult result;
  if (members.size() <= 1) return result;
  std::vector<std::int32_t> local(graph.num_nodes(), -1);
  for (std::size_t k = 0; k < members.size(); ++k) {
    local[members[k]] = static_cast<std::int32_t>(k);
  }
  using Item = std::pair<double, NodeId>;
  std::vector<double> dist(members.size());
  for (NodeId source : members) {
    std::fill(dist.begin(), dist.end(), kInfinity);
    std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
    dist[local[source]] = 0.0;
    heap.emplace(0.0, source);
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (d > dist[local[v]]) continue;
      auto nbrs = graph.neighbors(v);
      auto eids = graph.incident_edges(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        const std::int32_t slot = local[nbrs[k]];
        if (slot < 0) continue;
        const double w = hop_count ? 1.0 : graph.edge(eids[k]).distance;
        if (d + w < dist[slot]) {
          dist[slot] = d + w;
          heap.emplace(d + w, nbrs[k]);
        }
      }
    }
    for (double d : dist) {
      if (d == kInfinity) {
        result.disconnected = true;
      } else {
        result.value = std::max(result.value, d);
      }
    }
  }
  return result;
}

std::uint64_t TeamTriangles(std::span<const NodeId> members,
                            const TriangleIndex& triangles) {
  auto in_team = [&](NodeId v) {
    return std::binary_search(members.begin(), members.end(), v);
  };
  std::uint64_t count = 0;
  for (NodeId a : members) {
    for (const Triangle& t : triangles.triangles_from(a)) {
      if (in_team(t[1]) && in_team(t[2])) ++count;
    }
  }
  return count;
}

SeparabilityCounts CountSeparability(std::span<const NodeId> members,
                                     const CollaborationGraph& graph) {
  auto in_team = [&](NodeId v) {
    return std::binary_search(members.begin(), members.end(), v);
  };
  SeparabilityCounts c;
  for (NodeId v : members) {
    for (NodeId u : graph.neighbors(v)) {
      if (!in_team(u)) {
        ++c.out;
      } else if (v < u) {
        ++c.internal;
      }
    }
  }
  return c;
}

double TeamCitation(std::span<const NodeId> members,
                    const CollaborationGraph& graph) {
  if (members.empty()) return 0.0;
  double sum = 0.0;
  for (NodeId v : members) sum += static_cast<double>(graph.node(v).citation_sum);
  return sum / static_cast<double>(members.size());
}

TeamMetrics EvaluateTeam(std::string team_id, std::span<const NodeId> members,
                         const CollaborationGraph& graph,
                         const TriangleIndex& triangles, bool hop_count) {
  TeamMetrics m;
  m.team_id = std::move(team_id);
  m.size = members.size();
  m.ccr = Ccr(members, graph, hop_count);
  m.triangles = TeamTriangles(members, triangles);
  m.separability = Separability(members, graph);
  m.mean_citation = TeamCitation(members, graph);
  return m;
}

void WriteMetricsCsv(std::span<const TeamMetrics> metrics, std::ostream& out) {
  out << "team_id,size,ccr,disconnected,triangles,separability,mean_citation\n";
  for (const TeamMetrics& m : metrics) {
    out << m.team_id << ',' << m.size << ',' << FormatFixed(m.ccr.value, 9)
        << ',' << (m.ccr.disconnected ? "true" : "false") << ','
        << m.triangles << ',' << FormatFixed(m.separability, 9) << ','
        << FormatFixed(m.mean_citation, 9) << '\n';
  }
}

std::vector<TeamMetrics> ReadMetricsCsv(std::istream& in) {
  std::vector<TeamMetrics> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    if (n == 1 || line.empty()) continue;
    auto cols = Split(line, ',');
    if (cols.size() != 7 || (cols[3] != "true" && cols[3] != "false")) {
      throw std::runtime_error("metrics line " + std::to_string(n) +
                               ": malformed row");
    }
    try {
      TeamMetrics m;
      m.team_id = cols[0];
      m.size = static_cast<std::size_t>(ParseInt(cols[1]));
      m.ccr.value = ParseDouble(cols[2]);
      m.ccr.disconnected = cols[3] == "true";
      m.triangles = static_cast<std::uint64_t>(ParseInt(cols[4]));
      m.separability = ParseDouble(cols[5]);
      m.mean_citation = ParseDouble(cols[6]);
      out.push_back(std::move(m));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error("metrics line " + std::to_string(n) + ": " +
                               e.what());
    }
  }
  return out;
}

MetricsAggregate Aggregate(std::span<const TeamMetrics> metrics) {
  MetricsAggregate a;
  a.team_count = metrics.size();
  if (metrics.empty()) return a;
  for (const TeamMetrics& m : metrics) {
    a.mean_size += static_cast<double>(m.size);
    a.mean_ccr += m.ccr.value;
    a.mean_triangles += static_cast<double>(m.triangles);
    a.mean_separability += m.separability;
    a.mean_citation += m.mean_citation;
    if (m.ccr.disconnected) ++a.disconnected_count;
  }
  const double n = static_cast<double>(metrics.size());
  a.mean_size /= n;
  a.mean_ccr /= n;
  a.mean_triangles /= n;
  a.mean_separability /= n;
  a.mean_citation /= n;
  return a;
}

std::map<std::size_t, MetricsAggregate> AggregateBySize(
    std::span<const TeamMetrics> metrics) {
  std::map<std::size_t, std::vector<TeamMetrics>> groups;
  for (const TeamMetrics& m : metrics) groups[m.size].push_back(m);
  std::map<std::size_t, MetricsAggregate> out;
  for (const auto& [size, group] : groups) out[size] = Aggregate(group);
  return out;
}

bool IsInteragency(std::span<const NodeId> members,
                   const CollaborationGraph& graph) {
  std::set<std::string_view> seen;
  for (NodeId v : members) {
    for (const std::string& inst : graph.node(v).institutions) {
      seen.insert(inst);
      if (seen.size() >= 2) return true;
    }
  }
  return false;
}

std::vector<InteragencyRow> InteragencyReport(std::span<const TeamMembers> teams,
                                              const CollaborationGraph& graph,
                                              std::size_t min_size,
                                              std::size_t max_size,
                                              double top_quantile) {
  if (!(top_quantile > 0.0) || top_quantile > 1.0) {
    throw std::invalid_argument("top quantile must be in (0, 1]");
  }
  struct Entry {
    const TeamMembers* team;
    double citation;
    bool interagency;
  };
  std::map<std::size_t, std::vector<Entry>> by_size;
  for (const TeamMembers& t : teams) {
    const std::size_t size = t.members.size();
    if (size < min_size || size > max_size) continue;
    by_size[size].push_back({&t, TeamCitation(t.members, graph),
                             IsInteragency(t.members, graph)});
  }
  std::vector<InteragencyRow> rows;
  for (auto& [size, entries] : by_size) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) {
                if (a.citation != b.citation) return a.citation > b.citation;
                return a.team->team_id < b.team->team_id;
              });
    InteragencyRow row;
    row.team_size = size;
    row.team_count = entries.size();
    row.top_count = static_cast<std::size_t>(
        std::ceil(top_quantile * static_cast<double>(entries.size()) - 1e-9));
    row.top_count = std::clamp<std::size_t>(row.top_count, 1, entries.size());
    for (std::size_t k = 0; k < entries.size(); ++k) {
      if (!entries[k].interagency) continue;
      ++row.interagency_count;
      if (k < row.top_count) ++row.top_interagency_count;
    }
    row.proportion =
        static_cast<double>(row.interagency_count) / row.team_count;
    row.top_proportion =
        static_cast<double>(row.top_interagency_count) / row.top_count;
    rows.push_back(row);
  }
  return rows;
}

std::vector<std::pair<std::string, double>> CoauthorDistribution(
    std::span<const PublicationRecord> records) {
  std::vector<std::pair<std::string, double>> out;
  if (records.empty()) return out;
  std::vector<std::size_t> counts(kCoauthorBucketCap + 1, 0);
  for (const PublicationRecord& r : records) {
    ++counts[std::min(r.authors.size(), kCoauthorBucketCap)];
  }
  const double total = static_cast<double>(records.size());
  for (std::size_t k = 1; k <= kCoauthorBucketCap; ++k) {
    if (counts[k] == 0) continue;
    std::string label = std::to_string(k);
    if (k == kCoauthorBucketCap) label += "+";
    out.emplace_back(std::move(label), counts[k] / total);
  }
  return out;
}

}  // namespace moto
