#include "cli/run_config.h"

#include <fstream>
#include <functional>
#include <istream>

#include "moto/density_peaks.h"
#include "moto/format.h"

namespace moto::cli {
namespace {

using Validator = std::function<void(const std::string&)>;

void Fail(const std::string& key, const std::string& value,
          const std::string& why) {
  throw UsageError("invalid value '" + value + "' for " + key + ": " + why);
}

Validator Number(double lo, double hi, bool lo_open = false) {
  return [=](const std::string& v) {
    double x;
    try {
      x = ParseDouble(v);
    } catch (const std::invalid_argument&) {
      throw UsageError("not a number");
    }
    if (!(lo_open ? x > lo : x >= lo) || x > hi) throw UsageError("out of range");
  };
}

Validator Integer(long long lo, long long hi) {
  return [=](const std::string& v) {
    long long x;
    try {
      x = ParseInt(v);
    } catch (const std::invalid_argument&) {
      throw UsageError("not an integer");
    }
    if (x < lo || x > hi) throw UsageError("out of range");
  };
}

Validator OneOf(std::set<std::string> choices) {
  return [choices = std::move(choices)](const std::string& v) {
    if (!choices.contains(v)) throw UsageError("not one of the allowed values");
  };
}

std::pair<int, int> ParseYears(const std::string& text) {
  auto parts = Split(text, '-');
  if (parts.size() != 2) throw UsageError("expected YYYY-YYYY");
  try {
    int a = static_cast<int>(ParseInt(parts[0]));
    int b = static_cast<int>(ParseInt(parts[1]));
    if (a > b) throw UsageError("start year after end year");
    return {a, b};
  } catch (const std::invalid_argument&) {
    throw UsageError("expected YYYY-YYYY");
  }
}

void ValidateCutoff(const std::string& v) {
  if (v == "auto" || v == "preset") return;
  if (v.starts_with("preset:")) {
    if (!CutoffPresets().contains(v.substr(7))) {
      throw UsageError("no preset for that window");
    }
    return;
  }
  Number(0.0, 1e9, true)(v);
}

const std::map<std::string, Validator>& Validators() {
  static const auto* validators = new std::map<std::string, Validator>{
      {"window", [](const std::string& v) { if (v != "all") ParseYears(v); }},
      {"fields", [](const std::string&) {}},
      {"min_career_years", Integer(1, 1000)},
      {"largest_component", OneOf({"true", "false"})},
      {"cap", Number(0.0, 1e9, true)},
      {"d_c", ValidateCutoff},
      {"centers", [](const std::string& v) {
         try {
           ParseCenterPolicy(v);
         } catch (const std::invalid_argument& e) {
           throw UsageError(e.what());
         }
       }},
      {"mode", OneOf({"higher-order", "pairwise"})},
      {"familiarity_scope", OneOf({"graph", "team"})},
      {"min_team_size", Integer(1, 1000000)},
      {"seed", Integer(0, 9223372036854775807LL)},
      {"replicates", Integer(1, 1000000)},
      {"p_threshold", Number(0.0, 1.0)},
      {"min_frequency", Number(0.0, 1e18)},
      {"effect_ratio", Number(0.0, 1e9)},
      {"swaps_per_edge", Integer(1, 100000)},
      {"frequency_rule", OneOf({"at-least", "at-most"})},
      {"trac_intensity", OneOf({"cot", "inverse-distance"})},
      {"trac_min_intensity", Number(0.0, 1e18)},
      {"trac_min_partnership", Number(0.0, 1e18)},
      {"ccr", OneOf({"weighted", "hops"})},
      {"top_quantile", Number(0.0, 1.0, true)},
      {"report_min_size", Integer(1, 1000000)},
      {"report_max_size", Integer(1, 1000000)},
      {"dump_distances", OneOf({"true", "false"})},
  };
  return *validators;
}

}  // namespace

const std::vector<ConfigKey>& ConfigKeys() {
  static const auto* keys = new std::vector<ConfigKey>{
      {"window", "all", "publication years to keep, YYYY-YYYY or all"},
      {"fields", "", "comma-separated field whitelist (empty keeps all)"},
      {"min_career_years", "5", "minimum career span in years"},
      {"largest_component", "true", "keep only the largest component"},
      {"cap", "3.5", "shortest-path exploration cap"},
      {"d_c", "1.5", "cutoff distance: number, auto, preset or preset:YYYY-YYYY"},
      {"centers", "auto", "center policy: k:N, threshold:G or auto"},
      {"mode", "higher-order", "familiarity: higher-order or pairwise"},
      {"familiarity_scope", "graph", "triangles counted from the graph or the team"},
      {"min_team_size", "2", "smallest team reported"},
      {"seed", "0", "base seed for rewiring ensembles"},
      {"replicates", "100", "rewired graphs per motif test"},
      {"p_threshold", "0.01", "motif significance level P"},
      {"min_frequency", "4", "motif frequency bound U"},
      {"effect_ratio", "0.1", "motif effect size D"},
      {"swaps_per_edge", "10", "swap attempts per edge when rewiring"},
      {"frequency_rule", "at-least", "motif frequency test: at-least or at-most"},
      {"trac_intensity", "cot", "TRAC edge intensity: cot or inverse-distance"},
      {"trac_min_intensity", "2", "TRAC edge intensity threshold W"},
      {"trac_min_partnership", "0", "TRAC weighted-degree threshold"},
      {"ccr", "weighted", "CCR path length: weighted or hops"},
      {"top_quantile", "0.2", "top-cited share in the interagency report"},
      {"report_min_size", "2", "smallest team size in size tables"},
      {"report_max_size", "10", "largest team size in size tables"},
      {"dump_distances", "false", "write distances.csv from cluster"},
  };
  return *keys;
}

const std::map<std::string, double>& CutoffPresets() {
  static const auto* presets = new std::map<std::string, double>{
      {"2006-2009", 1.6}, {"2008-2011", 1.5}, {"2010-2013", 1.5},
      {"2012-2015", 1.5}, {"2014-2017", 1.4},
  };
  return *presets;
}

RunConfig::RunConfig() {
  for (const ConfigKey& k : ConfigKeys()) values_[k.name] = k.default_value;
}

void RunConfig::Set(const std::string& key, const std::string& value) {
  auto it = Validators().find(key);
  if (it == Validators().end()) throw UsageError("unknown config key '" + key + "'");
  try {
    it->second(value);
  } catch (const UsageError& e) {
    Fail(key, value, e.what());
  }
  values_[key] = value;
}

void RunConfig::SetAssignment(const std::string& assignment) {
  auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw UsageError("expected key=value, got '" + assignment + "'");
  }
  Set(assignment.substr(0, eq), assignment.substr(eq + 1));
}

void RunConfig::Load(std::istream& in, const std::string& origin) {
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw UsageError(origin + ":" + std::to_string(n) + ": expected key=value");
    }
    auto trim = [](std::string s) {
      auto a = s.find_first_not_of(" \t");
      auto b = s.find_last_not_of(" \t");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    try {
      Set(trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    } catch (const UsageError& e) {
      throw UsageError(origin + ":" + std::to_string(n) + ": " + e.what());
    }
  }
}

void RunConfig::LoadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open config file " + path);
  Load(in, path);
}

const std::string& RunConfig::Get(const std::string& key) const {
  return values_.at(key);
}

double RunConfig::GetDouble(const std::string& key) const {
  return ParseDouble(Get(key));
}

long long RunConfig::GetInt(const std::string& key) const {
  return ParseInt(Get(key));
}

bool RunConfig::GetBool(const std::string& key) const {
  return Get(key) == "true";
}

std::optional<std::pair<int, int>> RunConfig::Window() const {
  if (Get("window") == "all") return std::nullopt;
  return ParseYears(Get("window"));
}

std::set<std::string> RunConfig::Fields() const {
  std::set<std::string> out;
  if (Get("fields").empty()) return out;
  for (const std::string& f : Split(Get("fields"), ',')) {
    if (!f.empty()) out.insert(f);
  }
  return out;
}

std::optional<double> RunConfig::FixedCutoff() const {
  const std::string& v = Get("d_c");
  if (v == "auto") return std::nullopt;
  if (v == "preset") {
    auto it = CutoffPresets().find(Get("window"));
    if (it == CutoffPresets().end()) {
      throw UsageError("d_c=preset needs a window with a preset (" +
                       Get("window") + " has none)");
    }
    return it->second;
  }
  if (v.starts_with("preset:")) return CutoffPresets().at(v.substr(7));
  return ParseDouble(v);
}

RecognitionConfig RunConfig::Recognition(double d_c, unsigned workers) const {
  RecognitionConfig c;
  c.d_c = d_c;
  c.cap = GetDouble("cap");
  c.center_policy = ParseCenterPolicy(Get("centers"));
  c.mode = ParseFamiliarityMode(Get("mode"));
  c.familiarity_within_team = Get("familiarity_scope") == "team";
  c.min_team_size = static_cast<std::size_t>(GetInt("min_team_size"));
  c.workers = workers;
  return c;
}

MotifParams RunConfig::Motif() const {
  MotifParams p;
  p.replicates = static_cast<std::uint32_t>(GetInt("replicates"));
  p.p_threshold = GetDouble("p_threshold");
  p.min_frequency = GetDouble("min_frequency");
  p.effect_ratio = GetDouble("effect_ratio");
  p.seed = static_cast<std::uint64_t>(GetInt("seed"));
  p.swaps_per_edge = static_cast<std::uint32_t>(GetInt("swaps_per_edge"));
  p.frequency_rule = Get("frequency_rule") == "at-least" ? FrequencyRule::kAtLeast
                                                         : FrequencyRule::kAtMost;
  return p;
}

TracConfig RunConfig::Trac() const {
  TracConfig c;
  c.intensity = ParseTracIntensity(Get("trac_intensity"));
  c.min_intensity = GetDouble("trac_min_intensity");
  c.min_partnership = GetDouble("trac_min_partnership");
  return c;
}

}  // namespace moto::cli
