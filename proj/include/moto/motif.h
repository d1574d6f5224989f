#ifndef MOTO_MOTIF_H_
#define MOTO_MOTIF_H_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "moto/graph.h"

namespace moto {

using Triangle = std::array<NodeId, 3>;  // ascending

// Census of undirected triangles plus, per node, the sorted list of nodes it
// shares at least one triangle with.
class TriangleIndex {
 public:
  static TriangleIndex Build(const CollaborationGraph& graph,
                             unsigned workers = 1);

  std::size_t size() const { return triangles_.size(); }
  // Sorted lexicographically.
  const std::vector<Triangle>& triangles() const { return triangles_; }
  // Triangles whose smallest vertex is v.
  std::span<const Triangle> triangles_from(NodeId v) const {
    return {triangles_.data() + first_[v], first_[v + 1] - first_[v]};
  }
  std::uint64_t node_count(NodeId v) const { return per_node_[v]; }
  std::span<const NodeId> partners(NodeId v) const { return partners_[v]; }
  bool PairInTriangle(NodeId a, NodeId b) const;

 private:
  std::vector<Triangle> triangles_;
  std::vector<std::size_t> first_{0};
  std::vector<std::uint64_t> per_node_;
  std::vector<std::vector<NodeId>> partners_;
};

// Team members are passed as ascending node ids.

// Members j != i adjacent to i.
std::uint32_t PairwiseFamiliarity(NodeId i, std::span<const NodeId> team,
                                  const CollaborationGraph& graph);

// Members j != i that share at least one triangle with i anywhere in the
// graph.
std::uint32_t HigherOrderFamiliarity(NodeId i, std::span<const NodeId> team,
                                     const TriangleIndex& triangles);

// Variant counting only triangles whose third vertex is also in the team.
std::uint32_t HigherOrderFamiliarityWithin(NodeId i,
                                           std::span<const NodeId> team,
                                           const CollaborationGraph& graph);

inline constexpr std::uint32_t kDefaultSwapsPerEdge = 10;

// Double-edge-swap randomisation: swaps_per_edge * |E| swap attempts, each
// rejected if it would create a self-loop or a multi-edge. Edge attributes
// travel with the first endpoint of each swapped edge. Graphs with fewer
// than two edges are returned unchanged.
CollaborationGraph RewirePreservingDegrees(
    const CollaborationGraph& graph, std::uint64_t seed,
    std::uint32_t swaps_per_edge = kDefaultSwapsPerEdge);

enum class FrequencyRule {
  kAtLeast,  // f_real >= U
  kAtMost,   // f_real <= U, as printed in the original condition
};

struct MotifParams {
  std::uint32_t replicates = 100;  // N; 1000 for full-scale runs
  double p_threshold = 0.01;       // P
  double min_frequency = 4;        // U
  double effect_ratio = 0.1;       // D
  std::uint64_t seed = 0;
  std::uint32_t swaps_per_edge = kDefaultSwapsPerEdge;
  FrequencyRule frequency_rule = FrequencyRule::kAtLeast;
};

inline constexpr std::uint32_t kFullScaleReplicates = 1000;

struct MotifVerdict {
  std::uint64_t f_real = 0;
  double f_rand_mean = 0.0;
  double f_rand_std = 0.0;  // population standard deviation
  double p_estimate = 0.0;
  bool significant = false;   // p_estimate <= P
  bool frequent = false;      // frequency rule against U
  bool large_effect = false;  // f_real - mean > D * mean
  bool is_motif = false;
  std::vector<std::uint64_t> replicate_counts;
};

// Triangle significance against an ensemble of degree-preserving rewirings;
// replicate r uses seed + r.
MotifVerdict MotifSignificance(const CollaborationGraph& graph,
                               const MotifParams& params,
                               unsigned workers = 1);

void WriteVerdictJson(const MotifVerdict& verdict, const MotifParams& params,
                      std::ostream& out);
// CSV `replicate,triangles`.
void WriteEnsembleCsv(const MotifVerdict& verdict, std::ostream& out);

}  // namespace moto

#endif  // MOTO_MOTIF_H_
