#ifndef MOTO_DISTANCE_H_
#define MOTO_DISTANCE_H_

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moto/graph.h"

namespace moto {

inline constexpr double kDefaultDistanceCap = 3.5;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

// Collaboration distance 1 - |Pi ∩ Pj| / |Pi ∪ Pj| expressed through the
// shared-paper count and the two paper counts. Throws std::invalid_argument
// when co_count is zero or exceeds either paper count.
double EdgeDistance(std::uint32_t co_count, std::uint32_t papers_i,
                    std::uint32_t papers_j);

struct DistanceEntry {
  NodeId target;
  double distance;
};

// Shortest-path distances from `source` to every node within `cap`, sorted
// by target. Throws std::invalid_argument for an unknown source or cap <= 0.
std::vector<DistanceEntry> BoundedSssp(const CollaborationGraph& graph,
                                       NodeId source, double cap);

// Sparse all-pairs table of capped shortest-path distances. Pairs beyond the
// cap are absent and read back as +inf. Rows are exactly symmetric: each
// unordered pair carries the value found from its lower-index endpoint.
class DistanceIndex {
 public:
  DistanceIndex() = default;
  DistanceIndex(std::vector<std::vector<DistanceEntry>> rows, double cap);

  std::size_t num_nodes() const { return rows_.size(); }
  double cap() const { return cap_; }
  std::span<const DistanceEntry> row(NodeId source) const {
    return rows_[source];
  }
  // +inf when absent.
  double Distance(NodeId a, NodeId b) const;
  bool Contains(NodeId a, NodeId b) const { return Distance(a, b) < kInfinity; }
  std::size_t num_entries() const;

  friend bool operator==(const DistanceIndex& x, const DistanceIndex& y);

 private:
  std::vector<std::vector<DistanceEntry>> rows_;
  double cap_ = kDefaultDistanceCap;
};

// BoundedSssp from every node; rows are computed on up to `workers` threads
// and the result does not depend on the worker count.
DistanceIndex AllPairs(const CollaborationGraph& graph,
                       double cap = kDefaultDistanceCap, unsigned workers = 1);

// CSV `source,target,distance`, 9 decimals, sorted by (source, target).
void WriteDistanceCsv(const CollaborationGraph& graph,
                      const DistanceIndex& index, std::ostream& out);

}  // namespace moto

#endif  // MOTO_DISTANCE_H_
