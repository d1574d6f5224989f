#ifndef MOTO_CORPUS_H_
#define MOTO_CORPUS_H_

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "moto/graph.h"

namespace moto {

struct PublicationRecord {
  std::string paper_id;
  int year = 0;
  std::vector<std::string> authors;
  // Aligned with `authors` when non-empty.
  std::vector<std::vector<std::string>> institutions;
  std::uint64_t citations = 0;
  std::vector<std::string> fields;
};

struct RejectedLine {
  std::size_t line_number;  // 1-based
  std::string reason;
};

struct ParseResult {
  std::vector<PublicationRecord> records;
  std::vector<RejectedLine> rejects;
};

struct ParseOptions {
  int min_year = 1800;
  int max_year = 2100;
};

// Reads JSON-lines publication records. Blank lines are skipped. Malformed
// lines are reported in `rejects` and never abort the parse; a stream that
// fails mid-read throws std::runtime_error.
ParseResult ParsePublications(std::istream& in, const ParseOptions& options = {});

// Records with start_year <= year <= end_year. Throws std::invalid_argument
// when start_year > end_year.
std::vector<PublicationRecord> FilterWindow(
    const std::vector<PublicationRecord>& records, int start_year,
    int end_year);

// Keeps records carrying at least one whitelisted field tag. An empty
// whitelist keeps everything.
std::vector<PublicationRecord> FilterFields(
    const std::vector<PublicationRecord>& records,
    const std::set<std::string>& whitelist);

inline constexpr int kDefaultMinCareerYears = 5;

// Scholars whose career span (last - first + 1 years, measured over every
// record given) is at least `min_career_years`.
std::set<std::string> FilterScholars(
    const std::vector<PublicationRecord>& all_records,
    int min_career_years = kDefaultMinCareerYears);

struct ScholarProfile {
  std::string scholar_id;
  int first_year = 0;
  int last_year = 0;
  std::uint32_t paper_count = 0;
  std::set<std::string> institutions;
  std::uint64_t citation_sum = 0;
};

std::vector<ScholarProfile> ScholarProfiles(
    const std::vector<PublicationRecord>& records);

// Co-authorship graph over the retained scholars of the window. Edge weights
// come from EdgeDistance; paper counts, institutions and citation sums are
// all window-local.
CollaborationGraph BuildGraph(const std::vector<PublicationRecord>& window_records,
                              const std::set<std::string>& retained_scholars);

// Induced subgraph on the largest connected component. Equal sizes resolve to
// the component containing the smallest scholar id.
CollaborationGraph LargestComponent(const CollaborationGraph& graph);

struct NetworkProfile {
  std::size_t node_count = 0;
  std::size_t edge_count = 0;
  double avg_co_times = 0.0;
  double avg_degree = 0.0;
  std::uint64_t triangle_count = 0;
  double clustering_coefficient = 0.0;  // mean local coefficient
};

NetworkProfile Profile(const CollaborationGraph& graph);

// Snapshot format: edges as `a\tb\tcot\td` and nodes as
// `id\tpn\tinst1;inst2\tcitations`, both sorted. Distances use the shortest
// round-trip decimal representation.
void WriteEdgeList(const CollaborationGraph& graph, std::ostream& out);
void WriteNodeTable(const CollaborationGraph& graph, std::ostream& out);
// Throws std::runtime_error with a line number on malformed input.
CollaborationGraph ReadGraph(std::istream& nodes, std::istream& edges);

}  // namespace moto

#endif  // MOTO_CORPUS_H_
