#include "cli/commands.h"

#include <filesystem>
#include <iostream>
#include <map>
#include <sstream>

#include "cli/artifacts.h"
#include "json.hpp"
#include "moto/corpus.h"
#include "moto/density_peaks.h"
#include "moto/distance.h"
#include "moto/evaluation.h"
#include "moto/format.h"
#include "moto/motif.h"
#include "moto/team.h"
#include "moto/team_io.h"
#include "moto/trac.h"

namespace moto::cli {
namespace {

using nlohmann::ordered_json;
namespace fs = std::filesystem;

constexpr double kCutoffGridStep = 0.1;

// Tracks input digests and assembles the manifest.
class Run {
 public:
  explicit Run(const Invocation& inv) : inv_(inv), out_(inv.out_dir) {}

  std::string Read(const std::string& path, const std::string& role) {
    std::string bytes = ReadFileOrThrow(path);
    inputs_.push_back({{"role", role},
                       {"file", fs::path(path).filename().string()},
                       {"sha256", Sha256Hex(bytes)}});
    return bytes;
  }

  CollaborationGraph LoadGraph() {
    if (inv_.graph_dir.empty()) throw UsageError("--graph is required");
    const fs::path dir(inv_.graph_dir);
    std::istringstream nodes(Read((dir / "nodes.tsv").string(), "nodes"));
    std::istringstream edges(Read((dir / "edges.tsv").string(), "edges"));
    try {
      return ReadGraph(nodes, edges);
    } catch (const std::exception& e) {
      throw DataError(inv_.graph_dir + ": " + e.what());
    }
  }

  std::vector<PublicationRecord> LoadRecords(std::size_t* rejected,
                                             OutputSet* rejects_out) {
    if (inv_.input.empty()) throw UsageError("--input is required");
    std::istringstream in(Read(inv_.input, "publications"));
    ParseResult parsed;
    try {
      parsed = ParsePublications(in);
    } catch (const std::runtime_error& e) {
      throw DataError(inv_.input + ": " + e.what());
    }
    if (rejected != nullptr) *rejected = parsed.rejects.size();
    if (rejects_out != nullptr) {
      auto& out = rejects_out->Add("rejects.tsv");
      out << "line\treason\n";
      for (const RejectedLine& r : parsed.rejects) {
        out << r.line_number << '\t' << r.reason << '\n';
      }
    }
    return FilterFields(parsed.records, inv_.config.Fields());
  }

  void Note(const std::string& key, ordered_json value) {
    resolved_[key] = std::move(value);
  }

  OutputSet& out() { return out_; }

  void Commit() {
    ordered_json m;
    m["tool"] = "moto";
    m["command"] = inv_.command;
    ordered_json config = ordered_json::object();
    for (const auto& [k, v] : inv_.config.values()) config[k] = v;
    m["config"] = std::move(config);
    m["resolved"] = resolved_.empty() ? ordered_json::object() : resolved_;
    m["inputs"] = inputs_.empty() ? ordered_json::array() : inputs_;
    m["outputs"] = out_.names();
    out_.Add("manifest.json") << m.dump(2) << '\n';
    out_.Commit();
  }

 private:
  const Invocation& inv_;
  OutputSet out_;
  ordered_json inputs_ = ordered_json::array();
  ordered_json resolved_ = ordered_json::object();
};

double ResolveCutoff(const RunConfig& config, const DistanceIndex& distances,
                     Run& run) {
  std::optional<double> fixed = config.FixedCutoff();
  double d_c;
  if (fixed) {
    d_c = *fixed;
  } else {
    std::vector<double> grid = CutoffGrid(kCutoffGridStep, distances.cap());
    d_c = SuggestCutoff(ScanOccupancy(distances, grid));
  }
  if (DensityMayBeTruncated(distances, d_c)) {
    std::cerr << "warning: d_c " << FormatRoundTrip(d_c) << " exceeds cap "
              << FormatRoundTrip(distances.cap())
              << "; densities may be truncated\n";
  }
  run.Note("d_c", d_c);
  return d_c;
}

void WriteClusters(const CollaborationGraph& graph, const Clustering& c,
                   std::ostream& out) {
  out << "node_id,cluster,center\n";
  for (NodeId v = 0; v < graph.num_nodes(); ++v) {
    out << graph.scholar_id(v) << ',';
    if (c.assignment[v] == kUnassigned) {
      out << "unassigned,\n";
    } else {
      out << c.assignment[v] << ','
          << graph.scholar_id(c.centers[c.assignment[v]]) << '\n';
    }
  }
}

ordered_json Names(const CollaborationGraph& graph,
                   const std::vector<NodeId>& ids) {
  ordered_json out = ordered_json::array();
  for (NodeId v : ids) out.push_back(graph.scholar_id(v));
  return out;
}

ordered_json AggregateJson(const MetricsAggregate& a) {
  return {{"team_count", a.team_count},
          {"mean_size", a.mean_size},
          {"mean_ccr", a.mean_ccr},
          {"mean_triangles", a.mean_triangles},
          {"mean_separability", a.mean_separability},
          {"mean_citation", a.mean_citation},
          {"disconnected", a.disconnected_count}};
}

ordered_json InteragencyJson(const std::vector<InteragencyRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const InteragencyRow& r : rows) {
    out.push_back({{"team_size", r.team_size},
                   {"team_count", r.team_count},
                   {"interagency_count", r.interagency_count},
                   {"proportion", r.proportion},
                   {"top_count", r.top_count},
                   {"top_interagency_count", r.top_interagency_count},
                   {"top_proportion", r.top_proportion}});
  }
  return out;
}

std::vector<TeamMembers> LoadTeams(Run& run, const std::string& path,
                                   const CollaborationGraph& graph,
                                   std::string* bytes = nullptr) {
  std::string text = run.Read(path, "teams");
  std::istringstream in(text);
  if (bytes != nullptr) *bytes = std::move(text);
  try {
    std::vector<TeamRecord> records = ReadTeamsJson(in);
    return ResolveMembers(records, graph);
  } catch (const std::runtime_error& e) {
    throw DataError(path + ": " + e.what());
  }
}

void Ingest(const Invocation& inv) {
  Run run(inv);
  std::size_t rejected = 0;
  std::vector<PublicationRecord> records = run.LoadRecords(&rejected, &run.out());
  const std::size_t parsed = records.size() + rejected;
  std::set<std::string> retained = FilterScholars(
      records, static_cast<int>(inv.config.GetInt("min_career_years")));
  std::vector<PublicationRecord> window = records;
  if (auto w = inv.config.Window()) {
    window = FilterWindow(records, w->first, w->second);
  }
  CollaborationGraph graph = BuildGraph(window, retained);
  if (inv.config.GetBool("largest_component")) graph = LargestComponent(graph);
  WriteNodeTable(graph, run.out().Add("nodes.tsv"));
  WriteEdgeList(graph, run.out().Add("edges.tsv"));
  run.Note("window_records", window.size());
  run.Note("retained_scholars", retained.size());
  run.Commit();
  std::cout << "ingest: " << parsed << " records (" << rejected
            << " rejected), " << window.size() << " in window, "
            << retained.size() << " scholars retained, graph "
            << graph.num_nodes() << " nodes / " << graph.num_edges()
            << " edges\n";
}

void ProfileCommand(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  NetworkProfile p = Profile(graph);
  ordered_json j{{"nodes", p.node_count},
                 {"edges", p.edge_count},
                 {"avg_co_times", p.avg_co_times},
                 {"avg_degree", p.avg_degree},
                 {"triangles", p.triangle_count},
                 {"clustering_coefficient", p.clustering_coefficient}};
  run.out().Add("profile.json") << j.dump(2) << '\n';
  run.Commit();
  std::cout << "profile: " << p.node_count << " nodes, " << p.edge_count
            << " edges, " << p.triangle_count << " triangles, CCF "
            << FormatFixed(p.clustering_coefficient, 4) << '\n';
}

void SuggestDc(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  DistanceIndex distances =
      AllPairs(graph, inv.config.GetDouble("cap"), inv.workers);
  std::vector<double> grid = CutoffGrid(kCutoffGridStep, distances.cap());
  std::vector<OccupancyPoint> scan = ScanOccupancy(distances, grid);
  auto& csv = run.out().Add("occupancy.csv");
  csv << "d_c,mean_rho,occupancy,in_band\n";
  ordered_json in_band = ordered_json::array();
  for (const OccupancyPoint& p : scan) {
    csv << FormatFixed(p.d_c, 3) << ',' << FormatFixed(p.mean_rho, 9) << ','
        << FormatFixed(p.occupancy, 9) << ',' << (p.in_band ? "true" : "false")
        << '\n';
    if (p.in_band) in_band.push_back(p.d_c);
  }
  const double best = SuggestCutoff(scan);
  ordered_json j{{"suggested_d_c", best},
                 {"band", {kOccupancyLow, kOccupancyHigh}},
                 {"in_band", in_band}};
  run.out().Add("suggestion.json") << j.dump(2) << '\n';
  run.Note("d_c", best);
  run.Commit();
  std::cout << "suggest-dc: d_c=" << FormatRoundTrip(best) << ", "
            << in_band.size() << " of " << scan.size()
            << " candidates in the 1%-2% occupancy band\n";
}

void Cluster(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  DistanceIndex distances =
      AllPairs(graph, inv.config.GetDouble("cap"), inv.workers);
  const double d_c = ResolveCutoff(inv.config, distances, run);
  DensityProfile profile = ComputeDensityProfile(distances, d_c);
  std::vector<NodeId> centers =
      SelectCenters(profile, ParseCenterPolicy(inv.config.Get("centers")));
  if (centers.empty()) throw DataError("graph is empty");
  Clustering clustering = AssignClusters(centers, distances);
  WriteDecisionGraph(graph, profile, centers, run.out().Add("decision_graph.csv"));
  WriteClusters(graph, clustering, run.out().Add("clusters.csv"));
  if (inv.config.GetBool("dump_distances")) {
    WriteDistanceCsv(graph, distances, run.out().Add("distances.csv"));
  }
  run.Commit();
  std::cout << "cluster: " << centers.size() << " centers at d_c="
            << FormatRoundTrip(d_c) << ", " << clustering.Unassigned().size()
            << " unassigned nodes\n";
}

void RecognizeCommand(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  if (graph.empty()) throw DataError("graph is empty");
  DistanceIndex distances =
      AllPairs(graph, inv.config.GetDouble("cap"), inv.workers);
  const double d_c = ResolveCutoff(inv.config, distances, run);
  RecognitionConfig config = inv.config.Recognition(d_c, inv.workers);
  DensityProfile profile = ComputeDensityProfile(distances, d_c);
  std::vector<NodeId> centers = SelectCenters(profile, config.center_policy);
  Clustering clustering = AssignClusters(centers, distances);
  TriangleIndex triangles = TriangleIndex::Build(graph, inv.workers);
  RecognitionResult result = RecognizeFromClustering(
      graph, distances, triangles, std::move(profile), std::move(clustering),
      config);

  std::vector<TeamRecord> records;
  for (const RecognizedTeam& t : result.teams) records.push_back(ToRecord(t, graph));
  WriteTeamsJson(records, run.out().Add("teams.json"));
  WriteDecisionGraph(graph, result.profile, result.clustering.centers,
                     run.out().Add("decision_graph.csv"));
  WriteClusters(graph, result.clustering, run.out().Add("clusters.csv"));

  std::size_t flagged = 0;
  for (const RecognizedTeam& t : result.teams) flagged += !t.center_retained;
  ordered_json summary{
      {"d_c", d_c},
      {"mode", ToString(config.mode)},
      {"centers", Names(graph, result.clustering.centers)},
      {"teams", result.teams.size()},
      {"dissolved", result.dissolved},
      {"undersized", result.undersized},
      {"isolated_scholars", Names(graph, result.isolated_scholars)},
      {"unassigned", Names(graph, result.clustering.Unassigned())},
      {"centers_filtered_out", flagged}};
  run.out().Add("recognition.json") << summary.dump(2) << '\n';
  run.Commit();
  std::cout << "recognize: " << result.teams.size() << " teams ("
            << ToString(config.mode) << ", d_c=" << FormatRoundTrip(d_c)
            << ", " << result.clustering.centers.size() << " centers, "
            << result.dissolved.size() << " dissolved)\n";
}

void TracCommand(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  TracConfig config = inv.config.Trac();
  std::vector<TracTeam> teams = TracRecognize(graph, config);
  WriteTeamsJson(ToRecords(teams, graph), run.out().Add("teams.json"));
  run.Commit();
  std::cout << "trac: " << teams.size() << " teams (simplified TRAC, "
            << ToString(config.intensity) << " intensity, W="
            << FormatRoundTrip(config.min_intensity) << ")\n";
}

void Evaluate(const Invocation& inv) {
  if (inv.teams.empty()) throw UsageError("--teams is required");
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  std::string teams_json;
  std::vector<TeamMembers> teams = LoadTeams(run, inv.teams, graph, &teams_json);
  TriangleIndex triangles = TriangleIndex::Build(graph, inv.workers);
  const bool hops = inv.config.Get("ccr") == "hops";
  std::vector<TeamMetrics> metrics;
  for (const TeamMembers& t : teams) {
    metrics.push_back(EvaluateTeam(t.team_id, t.members, graph, triangles, hops));
  }
  WriteMetricsCsv(metrics, run.out().Add("metrics.csv"));
  // Kept beside the metrics so report can take this directory alone.
  run.out().Add("teams.json") << teams_json;

  ordered_json by_size = ordered_json::array();
  for (const auto& [size, agg] : AggregateBySize(metrics)) {
    ordered_json row{{"team_size", size}};
    row.update(AggregateJson(agg));
    by_size.push_back(std::move(row));
  }
  const auto min_size = static_cast<std::size_t>(inv.config.GetInt("report_min_size"));
  const auto max_size = static_cast<std::size_t>(inv.config.GetInt("report_max_size"));
  ordered_json summary{
      {"overall", AggregateJson(Aggregate(metrics))},
      {"by_size", by_size},
      {"interagency",
       InteragencyJson(InteragencyReport(teams, graph, min_size, max_size,
                                         inv.config.GetDouble("top_quantile")))}};
  run.out().Add("summary.json") << summary.dump(2) << '\n';
  run.Commit();
  const MetricsAggregate all = Aggregate(metrics);
  std::cout << "evaluate: " << metrics.size() << " teams, mean size "
            << FormatFixed(all.mean_size, 3) << ", mean separability "
            << FormatFixed(all.mean_separability, 3) << '\n';
}

void MotifTest(const Invocation& inv) {
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  MotifParams params = inv.config.Motif();
  MotifVerdict v = MotifSignificance(graph, params, inv.workers);
  WriteVerdictJson(v, params, run.out().Add("verdict.json"));
  WriteEnsembleCsv(v, run.out().Add("ensemble.csv"));
  run.Commit();
  std::cout << "motif-test: f_real=" << v.f_real << " f_rand="
            << FormatFixed(v.f_rand_mean, 3) << "+-"
            << FormatFixed(v.f_rand_std, 3) << " p="
            << FormatRoundTrip(v.p_estimate)
            << " is_motif=" << (v.is_motif ? "true" : "false") << '\n';
}

void Report(const Invocation& inv) {
  if (inv.runs.empty()) throw UsageError("report needs at least one --run LABEL=DIR");
  Run run(inv);
  CollaborationGraph graph = run.LoadGraph();
  const auto min_size = static_cast<std::size_t>(inv.config.GetInt("report_min_size"));
  const auto max_size = static_cast<std::size_t>(inv.config.GetInt("report_max_size"));
  const double q = inv.config.GetDouble("top_quantile");

  auto& sizes = run.out().Add("sizes.csv");
  sizes << "label,team_size,team_count,mean_ccr,mean_triangles,"
           "mean_separability,mean_citation\n";
  auto& inter = run.out().Add("interagency.csv");
  inter << "label,team_size,team_count,interagency_count,proportion,"
           "top_count,top_interagency_count,top_proportion\n";
  ordered_json methods = ordered_json::object();
  std::set<std::string> labels;
  for (const std::string& entry : inv.runs) {
    auto eq = entry.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == entry.size()) {
      throw UsageError("expected --run LABEL=DIR, got '" + entry + "'");
    }
    const std::string label = entry.substr(0, eq);
    if (!labels.insert(label).second) throw UsageError("duplicate run label " + label);
    const fs::path dir(entry.substr(eq + 1));
    std::istringstream metrics_in(run.Read((dir / "metrics.csv").string(),
                                           label + " metrics"));
    std::vector<TeamMetrics> metrics;
    try {
      metrics = ReadMetricsCsv(metrics_in);
    } catch (const std::runtime_error& e) {
      throw DataError(dir.string() + ": " + e.what());
    }
    std::vector<TeamMembers> teams =
        LoadTeams(run, (dir / "teams.json").string(), graph);

    auto by_size = AggregateBySize(metrics);
    for (std::size_t s = min_size; s <= max_size; ++s) {
      auto it = by_size.find(s);
      if (it == by_size.end()) continue;
      const MetricsAggregate& a = it->second;
      sizes << label << ',' << s << ',' << a.team_count << ','
            << FormatFixed(a.mean_ccr, 9) << ',' << FormatFixed(a.mean_triangles, 9)
            << ',' << FormatFixed(a.mean_separability, 9) << ','
            << FormatFixed(a.mean_citation, 9) << '\n';
    }
    auto rows = InteragencyReport(teams, graph, min_size, max_size, q);
    for (const InteragencyRow& r : rows) {
      inter << label << ',' << r.team_size << ',' << r.team_count << ','
            << r.interagency_count << ',' << FormatFixed(r.proportion, 9) << ','
            << r.top_count << ',' << r.top_interagency_count << ','
            << FormatFixed(r.top_proportion, 9) << '\n';
    }
    methods[label] = {{"overall", AggregateJson(Aggregate(metrics))},
                      {"interagency", InteragencyJson(rows)}};
  }

  ordered_json report{{"methods", methods}};
  if (!inv.input.empty()) {
    std::vector<PublicationRecord> records = run.LoadRecords(nullptr, nullptr);
    if (auto w = inv.config.Window()) {
      records = FilterWindow(records, w->first, w->second);
    }
    auto& coauthors = run.out().Add("coauthors.csv");
    coauthors << "authors,share\n";
    ordered_json dist = ordered_json::array();
    for (const auto& [bucket, share] : CoauthorDistribution(records)) {
      coauthors << bucket << ',' << FormatFixed(share, 9) << '\n';
      dist.push_back({{"authors", bucket}, {"share", share}});
    }
    report["coauthor_distribution"] = dist;
  }
  run.out().Add("report.json") << report.dump(2) << '\n';
  run.Commit();
  std::cout << "report: " << inv.runs.size() << " runs over sizes " << min_size
            << "-" << max_size << '\n';
}

}  // namespace

const std::vector<std::string>& Subcommands() {
  static const auto* names = new std::vector<std::string>{
      "ingest",   "profile",  "suggest-dc", "cluster", "recognize",
      "trac",     "evaluate", "motif-test", "report"};
  return *names;
}

void RunCommand(const Invocation& inv) {
  static const std::map<std::string, void (*)(const Invocation&)> table{
      {"ingest", Ingest},
      {"profile", ProfileCommand},
      {"suggest-dc", SuggestDc},
      {"cluster", Cluster},
      {"recognize", RecognizeCommand},
      {"trac", TracCommand},
      {"evaluate", Evaluate},
      {"motif-test", MotifTest},
      {"report", Report},
  };
  auto it = table.find(inv.command);
  if (it == table.end()) throw UsageError("unknown subcommand " + inv.command);
  it->second(inv);
}

}  // namespace moto::cli
