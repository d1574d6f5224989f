#ifndef MOTO_TEAM_IO_H_
#define MOTO_TEAM_IO_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "moto/evaluation.h"
#include "moto/graph.h"
#include "moto/team.h"
#include "moto/trac.h"

namespace moto {

struct InstitutionSplitRecord {
  std::string institution;
  std::vector<std::string> members;
};

// Serialized team, shared by MOTO (mode "pairwise"/"higher-order") and the
// TRAC baseline (mode "trac"). Scholar ids are sorted.
struct TeamRecord {
  std::string team_id;
  std::string center;
  double rho_threshold = 0.0;
  double familiarity_threshold = 0.0;
  std::string mode;
  bool center_retained = true;
  std::vector<std::string> members;
  std::vector<std::string> border;
  std::vector<InstitutionSplitRecord> institution_splits;
};

TeamRecord ToRecord(const RecognizedTeam& team, const CollaborationGraph& graph);
// TRAC teams are numbered by position in `teams`.
std::vector<TeamRecord> ToRecords(std::span<const TracTeam> teams,
                                  const CollaborationGraph& graph);

// JSON array of team objects, one per record, in the given order.
void WriteTeamsJson(std::span<const TeamRecord> teams, std::ostream& out);
// Throws std::runtime_error on malformed JSON or missing keys.
std::vector<TeamRecord> ReadTeamsJson(std::istream& in);

// Maps scholar ids back to node ids; throws std::runtime_error for members
// the graph does not contain.
std::vector<TeamMembers> ResolveMembers(std::span<const TeamRecord> teams,
                                        const CollaborationGraph& graph);

}  // namespace moto

#endif  // MOTO_TEAM_IO_H_
