#include "moto/team.h"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "moto/parallel.h"

namespace moto {

std::string ToString(FamiliarityMode mode) {
  return mode == FamiliarityMode::kPairwise ? "pairwise" : "higher-order";
}

FamiliarityMode ParseFamiliarityMode(const std::string& text) {
  if (text == "pairwise" || text == "P") return FamiliarityMode::kPairwise;
  if (text == "higher-order" || text == "H") {
    return FamiliarityMode::kHigherOrder;
  }
  throw std::invalid_argument("unknown familiarity mode '" + text +
                              "' (expected pairwise or higher-order)");
}

std::vector<NodeId> BorderRegion(const Clustering& clustering,
                                 std::size_t cluster,
                                 const DistanceIndex& distances, double d_c) {
  const auto id = static_cast<std::int32_t>(cluster);
  std::vector<NodeId> border;
  for (NodeId v = 0; v < clustering.assignment.size(); ++v) {
    if (clustering.assignment[v] != id) continue;
    for (const DistanceEntry& e : distances.row(v)) {
      if (e.distance < d_c && clustering.assignment[e.target] != id) {
        border.push_back(v);
        break;
      }
    }
  }
  return border;
}

TeamThresholds ComputeThresholds(std::span<const NodeId> border,
                                 std::span<const std::uint32_t> rho,
                                 const FamiliarityFn& familiarity) {
  TeamThresholds t;
  for (NodeId v : border) {
    t.rho = std::max(t.rho, static_cast<double>(rho[v]));
    t.familiarity = std::max(t.familiarity, static_cast<double>(familiarity(v)));
  }
  return t;
}

std::vector<NodeId> FilterTeam(std::span<const NodeId> members,
                               const TeamThresholds& thresholds,
                               std::span<const std::uint32_t> rho,
                               const FamiliarityFn& familiarity) {
  std::vector<NodeId> out;
  for (NodeId v : members) {
    if (rho[v] >= thresholds.rho && familiarity(v) >= thresholds.familiarity) {
      out.push_back(v);
    }
  }
  return out;
}

std::vector<InstitutionTeam> SplitByInstitution(
    std::size_t team_id, std::span<const NodeId> members,
    const CollaborationGraph& graph) {
  std::map<std::string, std::vector<NodeId>> groups;
  for (NodeId v : members) {
    const auto& inst = graph.node(v).institutions;
    if (inst.empty()) {
      groups[kUnknownInstitution].push_back(v);
      continue;
    }
    for (const std::string& name : inst) groups[name].push_back(v);
  }
  std::vector<InstitutionTeam> out;
  out.reserve(groups.size());
  for (auto& [name, ids] : groups) {
    std::sort(ids.begin(), ids.end());
    out.push_back({team_id, name, std::move(ids)});
  }
  return out;
}

RecognitionResult RecognizeFromClustering(const CollaborationGraph& graph,
                                          const DistanceIndex& distances,
                                          const TriangleIndex& triangles,
                                          DensityProfile profile,
                                          Clustering clustering,
                                          const RecognitionConfig& config) {
  const std::size_t k = clustering.centers.size();
  std::vector<std::vector<NodeId>> members(k);
  for (NodeId v = 0; v < clustering.assignment.size(); ++v) {
    if (clustering.assignment[v] != kUnassigned) {
      members[clustering.assignment[v]].push_back(v);
    }
  }

  std::vector<RecognizedTeam> all(k);
  ParallelFor(k, config.workers, [&](std::size_t c) {
    const std::vector<NodeId>& team = members[c];
    FamiliarityFn familiarity;
    if (config.mode == FamiliarityMode::kPairwise) {
      familiarity = [&](NodeId v) {
        return PairwiseFamiliarity(v, team, graph);
      };
    } else if (config.familiarity_within_team) {
      familiarity = [&](NodeId v) {
        return HigherOrderFamiliarityWithin(v, team, graph);
      };
    } else {
      familiarity = [&](NodeId v) {
        return HigherOrderFamiliarity(v, team, triangles);
      };
    }
    RecognizedTeam& t = all[c];
    t.team_id = c;
    t.center = clustering.centers[c];
    t.raw_members = team;
    t.mode = config.mode;
    t.border = BorderRegion(clustering, c, distances, config.d_c);
    t.thresholds = ComputeThresholds(t.border, profile.rho, familiarity);
    t.members = FilterTeam(team, t.thresholds, profile.rho, familiarity);
    t.center_retained =
        std::binary_search(t.members.begin(), t.members.end(), t.center);
    t.institution_splits = SplitByInstitution(c, t.members, graph);
  });

  RecognitionResult result;
  for (RecognizedTeam& t : all) {
    if (t.members.empty()) {
      result.dissolved.push_back(t.team_id);
    } else if (t.members.size() < config.min_team_size) {
      result.undersized.push_back(t.team_id);
      if (t.members.size() == 1) {
        result.isolated_scholars.push_back(t.members.front());
      }
    } else {
      result.teams.push_back(std::move(t));
    }
  }
  std::sort(result.isolated_scholars.begin(), result.isolated_scholars.end());
  result.profile = std::move(profile);
  result.clustering = std::move(clustering);
  return result;
}

RecognitionResult Recognize(const CollaborationGraph& graph,
                            const RecognitionConfig& config) {
  if (!(config.d_c > 0.0)) throw std::invalid_argument("d_c must be > 0");
  if (config.min_team_size < 1) {
    throw std::invalid_argument("min_team_size must be >= 1");
  }
  RecognitionResult empty;
  if (graph.empty()) return empty;
  DistanceIndex distances = AllPairs(graph, config.cap, config.workers);
  DensityProfile profile = ComputeDensityProfile(distances, config.d_c);
  std::vector<NodeId> centers = SelectCenters(profile, config.center_policy);
  Clustering clustering = AssignClusters(centers, distances);
  TriangleIndex triangles = TriangleIndex::Build(graph, config.workers);
  return RecognizeFromClustering(graph, distances, triangles,
                                 std::move(profile), std::move(clustering),
                                 config);
}

}  // namespace moto
