#ifndef MOTO_TEAM_H_
#define MOTO_TEAM_H_

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "moto/density_peaks.h"
#include "moto/distance.h"
#include "moto/graph.h"
#include "moto/motif.h"

namespace moto {

enum class FamiliarityMode {
  kPairwise,     // MOTO-P
  kHigherOrder,  // MOTO-H
};

std::string ToString(FamiliarityMode mode);
// Accepts "pairwise" / "higher-order". Throws std::invalid_argument.
FamiliarityMode ParseFamiliarityMode(const std::string& text);

// Familiarity of a node with the team it is being tested against.
using FamiliarityFn = std::function<std::uint32_t(NodeId)>;

// Members of `cluster` with some node outside the cluster (including
// unassigned nodes) strictly closer than d_c.
std::vector<NodeId> BorderRegion(const Clustering& clustering,
                                 std::size_t cluster,
                                 const DistanceIndex& distances, double d_c);

struct TeamThresholds {
  double rho = 0.0;
  double familiarity = 0.0;
};

// Maxima of rho and familiarity over the border; (0, 0) for an empty border.
TeamThresholds ComputeThresholds(std::span<const NodeId> border,
                                 std::span<const std::uint32_t> rho,
                                 const FamiliarityFn& familiarity);

// Members meeting both thresholds (>=), in input order.
std::vector<NodeId> FilterTeam(std::span<const NodeId> members,
                               const TeamThresholds& thresholds,
                               std::span<const std::uint32_t> rho,
                               const FamiliarityFn& familiarity);

inline const std::string kUnknownInstitution = "unknown";

struct InstitutionTeam {
  std::size_t team_id;
  std::string institution;
  std::vector<NodeId> members;
};

// One split per institution represented in `members`, sorted by institution
// name. Members without any institution go to kUnknownInstitution.
std::vector<InstitutionTeam> SplitByInstitution(std::size_t team_id,
                                                std::span<const NodeId> members,
                                                const CollaborationGraph& graph);

struct RecognizedTeam {
  std::size_t team_id;  // cluster index, i.e. center rank by gamma
  NodeId center;
  std::vector<NodeId> raw_members;
  std::vector<NodeId> border;
  TeamThresholds thresholds;
  std::vector<NodeId> members;
  FamiliarityMode mode;
  bool center_retained;
  std::vector<InstitutionTeam> institution_splits;
};

struct RecognitionConfig {
  double d_c = 1.5;
  double cap = kDefaultDistanceCap;
  CenterPolicy center_policy = AutoGap{};
  FamiliarityMode mode = FamiliarityMode::kHigherOrder;
  bool familiarity_within_team = false;  // triangles restricted to the team
  std::size_t min_team_size = 2;
  unsigned workers = 1;
};

struct RecognitionResult {
  DensityProfile profile;
  Clustering clustering;
  std::vector<RecognizedTeam> teams;       // |members| >= min_team_size
  std::vector<NodeId> isolated_scholars;   // size-1 remnants
  std::vector<std::size_t> dissolved;      // clusters whose filtered set is empty
  std::vector<std::size_t> undersized;     // 0 < |members| < min_team_size
};

// Filters every cluster of an existing clustering. Exposed separately so the
// stages can be run and inspected one at a time.
RecognitionResult RecognizeFromClustering(const CollaborationGraph& graph,
                                          const DistanceIndex& distances,
                                          const TriangleIndex& triangles,
                                          DensityProfile profile,
                                          Clustering clustering,
                                          const RecognitionConfig& config);

// Full pipeline: distances, density peaks, centers, assignment, then the
// border-threshold filter per cluster.
RecognitionResult Recognize(const CollaborationGraph& graph,
                            const RecognitionConfig& config);

}  // namespace moto

#endif  // MOTO_TEAM_H_
