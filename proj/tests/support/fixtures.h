#ifndef MOTO_TESTS_SUPPORT_FIXTURES_H_
#define MOTO_TESTS_SUPPORT_FIXTURES_H_

// Graph fixtures and brute-force oracles shared by the unit and acceptance
// suites. Nothing here calls into the code paths it is used to check.

#include <array>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "moto/corpus.h"
#include "moto/graph.h"

namespace moto::testing {

// Zero-padded ids so lexicographic order equals numeric order.
std::string NodeName(std::size_t i);

// Graph over nodes NodeName(0..n-1) with the given weighted edges.
struct WeightedEdge {
  std::size_t a;
  std::size_t b;
  double distance;
  std::uint32_t co_count = 1;
};
CollaborationGraph MakeGraph(std::size_t n,
                             const std::vector<WeightedEdge>& edges);

CollaborationGraph Path(std::size_t n, double weight);
CollaborationGraph Clique(std::size_t n, double weight);
CollaborationGraph Star(std::size_t leaves, double weight);

// G(n, p) with distances uniform in [min_w, max_w).
CollaborationGraph RandomGraph(std::size_t n, double p, std::uint64_t seed,
                               double min_w = 0.05, double max_w = 1.0);

struct PlantedRing {
  CollaborationGraph graph;
  std::vector<std::vector<NodeId>> teams;  // planted member sets, ascending
};

// `cliques` cliques of `size` nodes (clique c holds nodes c*size ..
// c*size+size-1) with intra distance `intra`; clique c and c+1 (mod cliques)
// are joined by one bridge of distance `bridge` between members chosen by
// `seed`. Intra edges carry co_count 3, bridges co_count 1.
PlantedRing MakePlantedRing(std::size_t cliques, std::size_t size,
                            double intra, double bridge, std::uint64_t seed);

// Two K4s joined through a path of `path_nodes` intermediate nodes.
CollaborationGraph TwoK4sWithPath(std::size_t path_nodes, double weight = 0.5);

struct PlantedCorpus {
  std::vector<PublicationRecord> records;
  std::vector<std::vector<std::string>> teams;  // planted author ids
};

// Publication corpus with `cliques` teams of `size` authors writing
// `team_papers` joint papers each, a ring of two-author bridge papers, and
// `noise_links` two-author papers from each team to distinct random authors
// of other teams. No cross-team pair is repeated. Every author also has a
// 2006 solo paper, so careers span 2006-2013, plus 0-2 more solo papers.
// Authors carry a team institution and sometimes a second one.
PlantedCorpus MakePlantedCorpus(std::size_t cliques, std::size_t size,
                                std::size_t team_papers,
                                std::size_t noise_links, std::uint64_t seed);

// One JSON object per line in the ingest input format.
void WriteCorpusJsonl(const std::vector<PublicationRecord>& records,
                      std::ostream& out);

// All-pairs shortest paths by Floyd-Warshall on a dense matrix; +inf when
// unreachable.
std::vector<std::vector<double>> FloydWarshall(const CollaborationGraph& graph);

// Triangles by triple enumeration over an adjacency matrix.
std::vector<std::array<NodeId, 3>> BruteForceTriangles(
    const CollaborationGraph& graph);

// Component label per node by breadth-first flood fill.
std::vector<std::size_t> FloodFill(const CollaborationGraph& graph);

}  // namespace moto::testing

#endif  // MOTO_TESTS_SUPPORT_FIXTURES_H_
