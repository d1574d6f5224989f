#include "moto/team_io.h"

#include <algorithm>
#include <istream>
#include <ostream>
#include <stdexcept>

#include "json.hpp"

namespace moto {
namespace {

using nlohmann::ordered_json;

std::vector<std::string> Names(std::span<const NodeId> ids,
                               const CollaborationGraph& graph) {
  std::vector<std::string> out;
  out.reserve(ids.size());
  for (NodeId v : ids) out.push_back(graph.scholar_id(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TeamRecord ToRecord(const RecognizedTeam& team,
                    const CollaborationGraph& graph) {
  TeamRecord r;
  r.team_id = std::to_string(team.team_id);
  r.center = graph.scholar_id(team.center);
  r.rho_threshold = team.thresholds.rho;
  r.familiarity_threshold = team.thresholds.familiarity;
  r.mode = ToString(team.mode);
  r.center_retained = team.center_retained;
  r.members = Names(team.members, graph);
  r.border = Names(team.border, graph);
  for (const InstitutionTeam& split : team.institution_splits) {
    r.institution_splits.push_back(
        {split.institution, Names(split.members, graph)});
  }
  return r;
}

std::vector<TeamRecord> ToRecords(std::span<const TracTeam> teams,
                                  const CollaborationGraph& graph) {
  std::vector<TeamRecord> out;
  for (std::size_t k = 0; k < teams.size(); ++k) {
    TeamRecord r;
    r.team_id = std::to_string(k);
    r.center = graph.scholar_id(teams[k].anchor);
    r.mode = "trac";
    r.members = Names(teams[k].members, graph);
    for (const InstitutionTeam& split :
         SplitByInstitution(k, teams[k].members, graph)) {
      r.institution_splits.push_back(
          {split.institution, Names(split.members, graph)});
    }
    out.push_back(std::move(r));
  }
  return out;
}

void WriteTeamsJson(std::span<const TeamRecord> teams, std::ostream& out) {
  ordered_json arr = ordered_json::array();
  for (const TeamRecord& t : teams) {
    ordered_json j;
    j["team_id"] = t.team_id;
    j["center"] = t.center;
    j["rho_threshold"] = t.rho_threshold;
    j["familiarity_threshold"] = t.familiarity_threshold;
    j["mode"] = t.mode;
    j["center_retained"] = t.center_retained;
    j["members"] = t.members;
    j["border"] = t.border;
    ordered_json splits = ordered_json::array();
    for (const InstitutionSplitRecord& s : t.institution_splits) {
      splits.push_back({{"institution", s.institution}, {"members", s.members}});
    }
    j["institution_splits"] = std::move(splits);
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

std::vector<TeamRecord> ReadTeamsJson(std::istream& in) {
  ordered_json arr;
  try {
    arr = ordered_json::parse(in);
  } catch (const ordered_json::exception& e) {
    throw std::runtime_error(std::string("teams file is not valid JSON: ") +
                             e.what());
  }
  if (!arr.is_array()) throw std::runtime_error("teams file must be an array");
  std::vector<TeamRecord> out;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const ordered_json& j = arr[k];
    try {
      TeamRecord r;
      r.team_id = j.at("team_id").get<std::string>();
      r.center = j.at("center").get<std::string>();
      r.rho_threshold = j.at("rho_threshold").get<double>();
      r.familiarity_threshold = j.at("familiarity_threshold").get<double>();
      r.mode = j.at("mode").get<std::string>();
      r.center_retained = j.value("center_retained", true);
      r.members = j.at("members").get<std::vector<std::string>>();
      r.border = j.at("border").get<std::vector<std::string>>();
      for (const ordered_json& s : j.at("institution_splits")) {
        r.institution_splits.push_back(
            {s.at("institution").get<std::string>(),
             s.at("members").get<std::vector<std::string>>()});
      }
      out.push_back(std::move(r));
    } catch (const ordered_json::exception& e) {
      throw std::runtime_error("team #" + std::to_string(k) + ": " + e.what());
    }
  }
  return out;
}

std::vector<TeamMembers> ResolveMembers(std::span<const TeamRecord> teams,
                                        const CollaborationGraph& graph) {
  std::vector<TeamMembers> out;
  out.reserve(teams.size());
  for (const TeamRecord& t : teams) {
    TeamMembers m{t.team_id, {}};
    for (const std::string& id : t.members) {
      auto v = graph.Find(id);
      if (!v) {
        throw std::runtime_error("team " + t.team_id +
                                 " references unknown scholar " + id);
      }
      m.members.push_back(*v);
    }
    std::sort(m.members.begin(), m.members.end());
    out.push_back(std::move(m));
  }
  return out;
}

}  // namespace moto
