#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli/commands.h"
#include "cli/run_config.h"

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string config_file;
  std::vector<std::string> assignments;
  moto::cli::Invocation inv;
};

std::string ConfigFooter() {
  std::string text = "Config keys (--set key=value, or key = value lines in --config):\n";
  for (const auto& k : moto::cli::ConfigKeys()) {
    text += "  " + k.name + " [" + k.default_value + "]  " + k.help + "\n";
  }
  return text;
}

void AddSubcommand(CLI::App& app, const std::string& name,
                   const std::string& description, Options& opt) {
  CLI::App* sub = app.add_subcommand(name, description);
  sub->add_option("--config", opt.config_file, "key = value config file");
  sub->add_option("--set", opt.assignments, "override one config key")
      ->type_name("KEY=VALUE");
  sub->add_option("--out", opt.inv.out_dir, "output directory")->required();
  sub->add_option("--workers", opt.inv.workers, "worker threads")
      ->check(CLI::Range(1u, 1024u));
  if (name == "ingest" || name == "report") {
    auto* input = sub->add_option("--input", opt.inv.input,
                                  "publication records, one JSON object per line");
    if (name == "ingest") input->required();
  } else {
    sub->add_option("--graph", opt.inv.graph_dir,
                    "directory holding nodes.tsv and edges.tsv")
        ->required();
  }
  if (name == "report") {
    sub->add_option("--graph", opt.inv.graph_dir,
                    "directory holding nodes.tsv and edges.tsv")
        ->required();
    sub->add_option("--run", opt.inv.runs,
                    "evaluated run: LABEL=DIR with metrics.csv and teams.json")
        ->required();
  }
  if (name == "evaluate") {
    sub->add_option("--teams", opt.inv.teams, "teams.json to evaluate")->required();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Team recognition in scholar collaboration networks"};
  app.require_subcommand(1);
  app.footer(ConfigFooter());
  Options opt;
  const std::vector<std::pair<std::string, std::string>> subcommands{
      {"ingest", "parse publication records into a collaboration graph"},
      {"profile", "network statistics of an ingested graph"},
      {"suggest-dc", "scan cutoff distances for 1%-2% neighbour occupancy"},
      {"cluster", "density-peaks clustering and decision graph"},
      {"recognize", "recognize teams (MOTO-H or MOTO-P)"},
      {"trac", "simplified TRAC baseline teams"},
      {"evaluate", "per-team metrics for a teams.json"},
      {"motif-test", "triangle motif test against degree-preserving rewirings"},
      {"report", "size tables and interagency comparison across runs"},
  };
  for (const auto& [name, description] : subcommands) {
    AddSubcommand(app, name, description, opt);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    opt.inv.command = app.get_subcommands().front()->get_name();
    if (!opt.config_file.empty()) opt.inv.config.LoadFile(opt.config_file);
    for (const std::string& a : opt.assignments) opt.inv.config.SetAssignment(a);
    moto::cli::RunCommand(opt.inv);
  } catch (const moto::cli::UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const moto::cli::DataError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  }
  return 0;
}
