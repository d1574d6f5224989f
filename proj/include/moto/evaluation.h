#ifndef MOTO_EVALUATION_H_
#define MOTO_EVALUATION_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "moto/corpus.h"
#include "moto/graph.h"
#include "moto/motif.h"

namespace moto {

struct CcrResult {
  double value = 0.0;
  bool disconnected = false;
};

// Diameter of the subgraph induced by `members`: the largest shortest-path
// length between connected member pairs, using edge distances (or hop counts
// when `hop_count` is set). A disconnected induced subgraph reports its
// largest finite eccentricity with the flag set.
CcrResult Ccr(std::span<const NodeId> members, const CollaborationGraph& graph,
              bool hop_count = false);

// Triangles with all three vertices in `members` (ascending ids).
std::uint64_t TeamTriangles(std::span<const NodeId> members,
                            const TriangleIndex& triangles);

struct SeparabilityCounts {
  std::uint64_t out = 0;       // edges with exactly one endpoint inside
  std::uint64_t internal = 0;  // edges with both endpoints inside
  double value() const {
    const std::uint64_t all = out + internal;
    return all == 0 ? 0.0 : static_cast<double>(out) / all;
  }
};

SeparabilityCounts CountSeparability(std::span<const NodeId> members,
                                     const CollaborationGraph& graph);
inline double Separability(std::span<const NodeId> members,
                           const CollaborationGraph& graph) {
  return CountSeparability(members, graph).value();
}

// Mean window citation count over the members.
double TeamCitation(std::span<const NodeId> members,
                    const CollaborationGraph& graph);

struct TeamMetrics {
  std::string team_id;
  std::size_t size = 0;
  CcrResult ccr;
  std::uint64_t triangles = 0;
  double separability = 0.0;
  double mean_citation = 0.0;
};

TeamMetrics EvaluateTeam(std::string team_id, std::span<const NodeId> members,
                         const CollaborationGraph& graph,
                         const TriangleIndex& triangles, bool hop_count = false);

// CSV `team_id,size,ccr,disconnected,triangles,separability,mean_citation`.
void WriteMetricsCsv(std::span<const TeamMetrics> metrics, std::ostream& out);
// Inverse of WriteMetricsCsv; throws std::runtime_error on malformed rows.
std::vector<TeamMetrics> ReadMetricsCsv(std::istream& in);

struct MetricsAggregate {
  std::size_t team_count = 0;
  double mean_size = 0.0;
  double mean_ccr = 0.0;
  double mean_triangles = 0.0;
  double mean_separability = 0.0;
  double mean_citation = 0.0;
  std::size_t disconnected_count = 0;
};

MetricsAggregate Aggregate(std::span<const TeamMetrics> metrics);
std::map<std::size_t, MetricsAggregate> AggregateBySize(
    std::span<const TeamMetrics> metrics);

// True when the members together list at least two distinct institutions.
bool IsInteragency(std::span<const NodeId> members,
                   const CollaborationGraph& graph);

struct InteragencyRow {
  std::size_t team_size = 0;
  std::size_t team_count = 0;
  std::size_t interagency_count = 0;
  double proportion = 0.0;
  std::size_t top_count = 0;  // teams in the top-citation quantile
  std::size_t top_interagency_count = 0;
  double top_proportion = 0.0;
};

struct TeamMembers {
  std::string team_id;
  std::vector<NodeId> members;
};

inline constexpr double kDefaultTopQuantile = 0.20;

// Per team size in [min_size, max_size]: share of interagency teams, and the
// same share among the top `top_quantile` of teams of that size ranked by
// mean citation (descending, ties by team id). The top slice holds
// ceil(q * count) teams. Sizes without teams are omitted.
std::vector<InteragencyRow> InteragencyReport(std::span<const TeamMembers> teams,
                                              const CollaborationGraph& graph,
                                              std::size_t min_size,
                                              std::size_t max_size,
                                              double top_quantile =
                                                  kDefaultTopQuantile);

inline constexpr std::size_t kCoauthorBucketCap = 10;

// Share of papers per author count; counts of 10 or more share the "10+"
// bucket. Buckets come back in ascending order ("1".."9", "10+"), and only
// buckets that occur are listed.
std::vector<std::pair<std::string, double>> CoauthorDistribution(
    std::span<const PublicationRecord> records);

}  // namespace moto

#endif  // MOTO_EVALUATION_H_
