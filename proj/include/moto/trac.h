#ifndef MOTO_TRAC_H_
#define MOTO_TRAC_H_

#include <string>
#include <vector>

#include "moto/graph.h"

namespace moto {

// Simplified TRAC: edge-intensity filtering with pluggable intensity and
// partnership scores standing in for the original CII and PHI indices.
enum class TracIntensity {
  kCoCount,         // cot_ij
  kInverseDistance  // 1 - d_ij
};

std::string ToString(TracIntensity intensity);
TracIntensity ParseTracIntensity(const std::string& text);

struct TracConfig {
  TracIntensity intensity = TracIntensity::kCoCount;
  double min_intensity = 2.0;  // W
  double min_partnership = 0.0;  // phi_min, against weighted degree
};

struct TracTeam {
  std::vector<NodeId> members;  // ascending
  NodeId anchor;                // member with the largest partnership score
};

double TracEdgeIntensity(const Edge& edge, TracIntensity intensity);

// 1) weight edges by intensity, 2) drop nodes whose weighted degree is below
// min_partnership, 3) drop edges below min_intensity and the nodes they
// leave isolated. Teams are the remaining components with two or more
// members, ordered by smallest member. Throws std::invalid_argument for
// negative thresholds.
std::vector<TracTeam> TracRecognize(const CollaborationGraph& graph,
                                    const TracConfig& config);

}  // namespace moto

#endif  // MOTO_TRAC_H_
