#include "moto/trac.h"

#include <algorithm>
#include <stdexcept>

namespace moto {

std::string ToString(TracIntensity intensity) {
  return intensity == TracIntensity::kCoCount ? "cot" : "inverse-distance";
}

TracIntensity ParseTracIntensity(const std::string& text) {
  if (text == "cot") return TracIntensity::kCoCount;
  if (text == "inverse-distance") return TracIntensity::kInverseDistance;
  throw std::invalid_argument("unknown TRAC intensity '" + text +
                              "' (expected cot or inverse-distance)");
}

double TracEdgeIntensity(const Edge& edge, TracIntensity intensity) {
  return intensity == TracIntensity::kCoCount
             ? static_cast<double>(edge.co_count)
             : 1.0 - edge.distance;
}

std::vector<TracTeam> TracRecognize(const CollaborationGraph& graph,
                                    const TracConfig& config) {
  if (config.min_intensity < 0.0 || config.min_partnership < 0.0) {
    throw std::invalid_argument("TRAC thresholds must be >= 0");
  }
  const std::size_t n = graph.num_nodes();
  std::vector<double> intensity(graph.num_edges());
  std::vector<double> partnership(n, 0.0);
  for (EdgeId e = 0; e < graph.num_edges(); ++e) {
    intensity[e] = TracEdgeIntensity(graph.edge(e), config.intensity);
    partnership[graph.edge(e).u] += intensity[e];
    partnership[graph.edge(e).v] += intensity[e];
  }
  std::vector<bool> alive(n);
  for (NodeId v = 0; v < n; ++v) {
    alive[v] = partnership[v] >= config.min_partnership;
  }
  auto keep_edge = [&](EdgeId e) {
    const Edge& edge = graph.edge(e);
    return alive[edge.u] && alive[edge.v] &&
           intensity[e] >= config.min_intensity;
  };

  std::vector<bool> seen(n, false);
  std::vector<TracTeam> teams;
  std::vector<NodeId> stack;
  for (NodeId s = 0; s < n; ++s) {
    if (seen[s] || !alive[s]) continue;
    seen[s] = true;
    TracTeam team{{}, s};
    stack.push_back(s);
    while (!stack.empty()) {
      NodeId v = stack.back();
      stack.pop_back();
      team.members.push_back(v);
      auto nbrs = graph.neighbors(v);
      auto eids = graph.incident_edges(v);
      for (std::size_t k = 0; k < nbrs.size(); ++k) {
        if (!seen[nbrs[k]] && keep_edge(eids[k])) {
          seen[nbrs[k]] = true;
          stack.push_back(nbrs[k]);
        }
      }
    }
    if (team.members.size() < 2) continue;
    std::sort(team.members.begin(), team.members.end());
    for (NodeId v : team.members) {
      if (partnership[v] > partnership[team.anchor]) team.anchor = v;
    }
    teams.push_back(std::move(team));
  }
  return teams;
}

}  // namespace moto
