#ifndef MOTO_DENSITY_PEAKS_H_
#define MOTO_DENSITY_PEAKS_H_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "moto/distance.h"
#include "moto/graph.h"

namespace moto {

// Number of other nodes strictly closer than d_c. Pairs beyond the index cap
// count as unreachable, so a d_c above the cap may undercount; check
// DensityMayBeTruncated. Throws std::invalid_argument when d_c <= 0.
std::vector<std::uint32_t> LocalDensity(const DistanceIndex& distances,
                                        double d_c);

inline bool DensityMayBeTruncated(const DistanceIndex& distances, double d_c) {
  return d_c > distances.cap();
}

// Nodes sorted by (rho desc, id asc). Position in this order replaces the
// strict rho comparison when deciding which nodes are "denser".
std::vector<NodeId> TieBreakOrder(std::span<const std::uint32_t> rho);

// Minimum distance to any earlier node in `order`. The first node gets its
// largest finite distance instead. Missing values fall back to the cap.
std::vector<double> DistinguishableDistance(const DistanceIndex& distances,
                                            std::span<const NodeId> order);

struct DensityProfile {
  std::vector<std::uint32_t> rho;
  std::vector<double> delta;
  std::vector<double> rho_norm;
  std::vector<double> delta_norm;
  std::vector<double> gamma;
  std::vector<NodeId> order;          // tie-break order
  std::vector<std::uint32_t> rank;    // rank[v] = position of v in order

  std::size_t size() const { return rho.size(); }
};

// Min-max normalises rho and delta independently and multiplies them. A
// field with no spread falls back to max scaling: all ones when its value is
// positive, all zeros when it is zero.
DensityProfile GammaScores(std::span<const std::uint32_t> rho,
                           std::span<const double> delta);

// LocalDensity -> TieBreakOrder -> DistinguishableDistance -> GammaScores.
DensityProfile ComputeDensityProfile(const DistanceIndex& distances,
                                     double d_c);

struct TopK {
  std::size_t k;
};
struct GammaThreshold {
  double min_gamma;
};
// Among the top ceil(sqrt(n)) nodes by gamma, cut where the ratio between
// consecutive gammas (including the first node after the window) is largest.
struct AutoGap {};

using CenterPolicy = std::variant<TopK, GammaThreshold, AutoGap>;

// Parses "k:5", "threshold:0.3" or "auto". Throws std::invalid_argument.
CenterPolicy ParseCenterPolicy(const std::string& text);
std::string ToString(const CenterPolicy& policy);

// Node ids sorted by gamma desc then id asc.
std::vector<NodeId> GammaOrder(const DensityProfile& profile);

// Throws std::invalid_argument when the policy selects nothing (k == 0,
// k > n, or a threshold above every gamma). An empty profile yields no
// centers.
std::vector<NodeId> SelectCenters(const DensityProfile& profile,
                                  const CenterPolicy& policy);

inline constexpr std::int32_t kUnassigned = -1;

struct Clustering {
  std::vector<NodeId> centers;
  // Index into `centers`, or kUnassigned when no center is reachable.
  std::vector<std::int32_t> assignment;

  std::vector<NodeId> Members(std::size_t cluster) const;
  std::vector<NodeId> Unassigned() const;
};

// Each node goes to its nearest center; ties go to the center listed first
// and centers always keep themselves. Throws std::invalid_argument for an
// empty center list.
Clustering AssignClusters(std::span<const NodeId> centers,
                          const DistanceIndex& distances);

enum class DecisionRegion {
  kCenter = 1,      // high rho, high delta
  kCore = 2,        // high rho, low delta
  kPeriphery = 3,   // low rho, low delta
  kIsolated = 4,    // low rho, high delta
};

// Region of each node relative to the weakest selected center: rho_norm and
// delta_norm are "high" when at least the minimum over `centers`.
std::vector<DecisionRegion> ClassifyRegions(const DensityProfile& profile,
                                            std::span<const NodeId> centers);

// CSV `node_id,rho,delta,rho_norm,delta_norm,gamma,is_center,region`, rows in
// GammaOrder.
void WriteDecisionGraph(const CollaborationGraph& graph,
                        const DensityProfile& profile,
                        std::span<const NodeId> centers, std::ostream& out);

struct OccupancyPoint {
  double d_c;
  double mean_rho;
  double occupancy;  // mean_rho / node count
  bool in_band;
};

inline constexpr double kOccupancyLow = 0.01;
inline constexpr double kOccupancyHigh = 0.02;

// Mean neighbourhood occupancy for each candidate d_c.
std::vector<OccupancyPoint> ScanOccupancy(const DistanceIndex& distances,
                                          std::span<const double> candidates);

// Candidate whose occupancy is closest to the middle of the 1%-2% band,
// preferring in-band points and then the smaller d_c.
double SuggestCutoff(std::span<const OccupancyPoint> scan);

// Candidate grid step, step*2, ..., up to and including `cap`.
std::vector<double> CutoffGrid(double step, double cap);

}  // namespace moto

#endif  // MOTO_DENSITY_PEAKS_H_
