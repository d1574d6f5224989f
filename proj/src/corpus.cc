#include "moto/corpus.h"

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "json.hpp"
#include "moto/distance.h"
#include "moto/format.h"
#include "moto/motif.h"

namespace moto {
namespace {

using nlohmann::json;

// Returns an empty string on success, the rejection reason otherwise.
std::string DecodeRecord(const json& obj, const ParseOptions& options,
                         PublicationRecord& rec) {
  if (!obj.is_object()) return "not a JSON object";
  auto id = obj.find("paper_id");
  if (id == obj.end() || !id->is_string()) return "missing string paper_id";
  rec.paper_id = id->get<std::string>();

  auto year = obj.find("year");
  if (year == obj.end() || !year->is_number_integer()) {
    return "missing integer year";
  }
  rec.year = year->get<int>();
  if (rec.year < options.min_year || rec.year > options.max_year) {
    return "year " + std::to_string(rec.year) + " outside configured bounds";
  }

  auto authors = obj.find("authors");
  if (authors == obj.end() || !authors->is_array() || authors->empty()) {
    return "missing non-empty authors array";
  }
  std::unordered_set<std::string> seen;
  for (const json& a : *authors) {
    if (!a.is_string() || a.get_ref<const std::string&>().empty()) {
      return "author ids must be non-empty strings";
    }
    if (!seen.insert(a.get<std::string>()).second) {
      return "duplicate author " + a.get<std::string>();
    }
    rec.authors.push_back(a.get<std::string>());
  }

  if (auto inst = obj.find("institutions"); inst != obj.end()) {
    if (!inst->is_array()) return "institutions must be an array";
    if (!inst->empty() && inst->size() != rec.authors.size()) {
      return "institutions not aligned with authors";
    }
    for (const json& per_author : *inst) {
      if (!per_author.is_array()) return "institutions entries must be arrays";
      std::vector<std::string> list;
      for (const json& name : per_author) {
        if (!name.is_string()) return "institution ids must be strings";
        list.push_back(name.get<std::string>());
      }
      rec.institutions.push_back(std::move(list));
    }
  }

  if (auto cit = obj.find("citations"); cit != obj.end()) {
    if (!cit->is_number_integer() || cit->get<long long>() < 0) {
      return "citations must be a non-negative integer";
    }
    rec.citations = cit->get<std::uint64_t>();
  }

  if (auto fields = obj.find("fields"); fields != obj.end()) {
    if (!fields->is_array()) return "fields must be an array";
    for (const json& f : *fields) {
      if (!f.is_string()) return "field tags must be strings";
      rec.fields.push_back(f.get<std::string>());
    }
  }
  return {};
}

}  // namespace

ParseResult ParsePublications(std::istream& in, const ParseOptions& options) {
  if (!in) throw std::runtime_error("publication stream is not readable");
  ParseResult result;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json obj = json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (obj.is_discarded()) {
      result.rejects.push_back({line_number, "invalid JSON"});
      continue;
    }
    PublicationRecord rec;
    std::string reason = DecodeRecord(obj, options, rec);
    if (!reason.empty()) {
      result.rejects.push_back({line_number, std::move(reason)});
      continue;
    }
    result.records.push_back(std::move(rec));
  }
  if (in.bad()) {
    throw std::runtime_error("I/O error reading publications at line " +
                             std::to_string(line_number + 1));
  }
  return result;
}

std::vector<PublicationRecord> FilterWindow(
    const std::vector<PublicationRecord>& records, int start_year,
    int end_year) {
  if (start_year > end_year) {
    throw std::invalid_argument("window start " + std::to_string(start_year) +
                                " after end " + std::to_string(end_year));
  }
  std::vector<PublicationRecord> out;
  for (const PublicationRecord& r : records) {
    if (r.year >= start_year && r.year <= end_year) out.push_back(r);
  }
  return out;
}

std::vector<PublicationRecord> FilterFields(
    const std::vector<PublicationRecord>& records,
    const std::set<std::string>& whitelist) {
  if (whitelist.empty()) return records;
  std::vector<PublicationRecord> out;
  for (const PublicationRecord& r : records) {
    bool keep = std::any_of(r.fields.begin(), r.fields.end(),
                            [&](const std::string& f) {
                              return whitelist.contains(f);
                            });
    if (keep) out.push_back(r);
  }
  return out;
}

std::vector<ScholarProfile> ScholarProfiles(
    const std::vector<PublicationRecord>& records) {
  std::map<std::string, ScholarProfile> by_id;
  for (const PublicationRecord& r : records) {
    for (std::size_t k = 0; k < r.authors.size(); ++k) {
      auto [it, inserted] = by_id.try_emplace(r.authors[k]);
      ScholarProfile& p = it->second;
      if (inserted) {
        p.scholar_id = r.authors[k];
        p.first_year = p.last_year = r.year;
      }
      p.first_year = std::min(p.first_year, r.year);
      p.last_year = std::max(p.last_year, r.year);
      ++p.paper_count;
      p.citation_sum += r.citations;
      if (k < r.institutions.size()) {
        p.institutions.insert(r.institutions[k].begin(),
                              r.institutions[k].end());
      }
    }
  }
  std::vector<ScholarProfile> out;
  out.reserve(by_id.size());
  for (auto& [id, p] : by_id) out.push_back(std::move(p));
  return out;
}

std::set<std::string> FilterScholars(
    const std::vector<PublicationRecord>& all_records, int min_career_years) {
  std::set<std::string> out;
  for (const ScholarProfile& p : ScholarProfiles(all_records)) {
    if (p.last_year - p.first_year + 1 >= min_career_years) {
      out.insert(p.scholar_id);
    }
  }
  return out;
}

CollaborationGraph BuildGraph(
    const std::vector<PublicationRecord>& window_records,
    const std::set<std::string>& retained_scholars) {
  // Same paper id listed twice in the window counts once.
  std::vector<PublicationRecord> retained;
  std::unordered_set<std::string> seen_papers;
  for (const PublicationRecord& r : window_records) {
    if (!seen_papers.insert(r.paper_id).second) continue;
    PublicationRecord kept;
    kept.paper_id = r.paper_id;
    kept.year = r.year;
    kept.citations = r.citations;
    for (std::size_t k = 0; k < r.authors.size(); ++k) {
      if (!retained_scholars.contains(r.authors[k])) continue;
      kept.authors.push_back(r.authors[k]);
      kept.institutions.push_back(k < r.institutions.size()
                                      ? r.institutions[k]
                                      : std::vector<std::string>{});
    }
    if (!kept.authors.empty()) retained.push_back(std::move(kept));
  }

  std::vector<ScholarProfile> profiles = ScholarProfiles(retained);
  std::vector<NodeAttributes> nodes;
  nodes.reserve(profiles.size());
  std::unordered_map<std::string, NodeId> index;
  for (ScholarProfile& p : profiles) {
    index.emplace(p.scholar_id, static_cast<NodeId>(nodes.size()));
    nodes.push_back({p.scholar_id, p.paper_count,
                     {p.institutions.begin(), p.institutions.end()},
                     p.citation_sum});
  }

  std::map<std::pair<NodeId, NodeId>, std::uint32_t> co_counts;
  std::vector<NodeId> ids;
  for (const PublicationRecord& r : retained) {
    ids.clear();
    for (const std::string& a : r.authors) ids.push_back(index.at(a));
    std::sort(ids.begin(), ids.end());
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        ++co_counts[{ids[i], ids[j]}];
      }
    }
  }
  std::vector<Edge> edges;
  edges.reserve(co_counts.size());
  for (const auto& [pair, cot] : co_counts) {
    double d = EdgeDistance(cot, nodes[pair.first].paper_count,
                            nodes[pair.second].paper_count);
    edges.push_back({pair.first, pair.second, cot, d});
  }
  return CollaborationGraph::FromSortedNodes(std::move(nodes),
                                             std::move(edges));
}

CollaborationGraph LargestComponent(const CollaborationGraph& graph) {
  if (graph.empty()) return graph;
  std::size_t count = 0;
  std::vector<NodeId> label = ConnectedComponents(graph, &count);
  std::vector<std::size_t> sizes(count, 0);
  for (NodeId l : label) ++sizes[l];
  // Labels are assigned in order of each component's smallest node, so the
  // first maximum is the tie-break winner.
  NodeId best = static_cast<NodeId>(
      std::max_element(sizes.begin(), sizes.end()) - sizes.begin());
  if (count == 1) return graph;
  std::vector<NodeId> keep;
  keep.reserve(sizes[best]);
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    if (label[v] == best) keep.push_back(v);
  }
  return graph.InducedSubgraph(keep);
}

NetworkProfile Profile(const CollaborationGraph& graph) {
  NetworkProfile p;
  p.node_count = graph.num_nodes();
  p.edge_count = graph.num_edges();
  if (p.node_count == 0) return p;
  double co_sum = 0.0;
  for (const Edge& e : graph.edges()) co_sum += e.co_count;
  p.avg_co_times = p.edge_count > 0 ? co_sum / p.edge_count : 0.0;
  p.avg_degree = 2.0 * p.edge_count / p.node_count;

  TriangleIndex triangles = TriangleIndex::Build(graph);
  p.triangle_count = triangles.size();
  double cc_sum = 0.0;
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    const double k = static_cast<double>(graph.degree(v));
    if (k < 2) continue;
    cc_sum += triangles.node_count(v) / (k * (k - 1) / 2.0);
  }
  p.clustering_coefficient = cc_sum / p.node_count;
  return p;
}

void WriteEdgeList(const CollaborationGraph& graph, std::ostream& out) {
  for (const Edge& e : graph.edges()) {
    out << graph.scholar_id(e.u) << '\t' << graph.scholar_id(e.v) << '\t'
        << e.co_count << '\t' << FormatRoundTrip(e.distance) << '\n';
  }
}

void WriteNodeTable(const CollaborationGraph& graph, std::ostream& out) {
  for (const NodeAttributes& n : graph.nodes()) {
    out << n.scholar_id << '\t' << n.paper_count << '\t'
        << Join(n.institutions, ";") << '\t' << n.citation_sum << '\n';
  }
}

CollaborationGraph ReadGraph(std::istream& nodes_in, std::istream& edges_in) {
  auto fail = [](const char* what, std::size_t line, const std::string& why) {
    throw std::runtime_error(std::string(what) + " line " +
                             std::to_string(line) + ": " + why);
  };
  std::vector<NodeAttributes> nodes;
  std::string line;
  std::size_t n = 0;
  while (std::getline(nodes_in, line)) {
    ++n;
    if (line.empty()) continue;
    auto cols = Split(line, '\t');
    if (cols.size() != 4) fail("node table", n, "expected 4 columns");
    NodeAttributes attr;
    attr.scholar_id = cols[0];
    try {
      attr.paper_count = static_cast<std::uint32_t>(ParseInt(cols[1]));
      attr.citation_sum = static_cast<std::uint64_t>(ParseInt(cols[3]));
    } catch (const std::invalid_argument& e) {
      fail("node table", n, e.what());
    }
    if (!cols[2].empty()) attr.institutions = Split(cols[2], ';');
    nodes.push_back(std::move(attr));
  }
  std::vector<EdgeSpec> edges;
  n = 0;
  while (std::getline(edges_in, line)) {
    ++n;
    if (line.empty()) continue;
    auto cols = Split(line, '\t');
    if (cols.size() != 4) fail("edge list", n, "expected 4 columns");
    EdgeSpec e{cols[0], cols[1], 0, 0.0};
    try {
      long long cot = ParseInt(cols[2]);
      if (cot <= 0) fail("edge list", n, "co-count must be positive");
      e.co_count = static_cast<std::uint32_t>(cot);
      e.distance = ParseDouble(cols[3]);
    } catch (const std::invalid_argument& err) {
      fail("edge list", n, err.what());
    }
    edges.push_back(std::move(e));
  }
  try {
    return CollaborationGraph::Create(std::move(nodes), std::move(edges));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid graph snapshot: ") +
                             e.what());
  }
}

}  // namespace moto
