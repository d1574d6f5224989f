#ifndef MOTO_TOOLS_CLI_COMMANDS_H_
#define MOTO_TOOLS_CLI_COMMANDS_H_

#include <string>
#include <vector>

#include "cli/run_config.h"

namespace moto::cli {

struct Invocation {
  std::string command;
  RunConfig config;
  unsigned workers = 1;
  std::string out_dir;
  std::string input;       // publication JSON lines
  std::string graph_dir;   // nodes.tsv + edges.tsv written by ingest
  std::string teams;       // teams.json
  std::vector<std::string> runs;  // label=DIR pairs for report
};

const std::vector<std::string>& Subcommands();

// Runs one subcommand and prints its one-line summary. Throws UsageError,
// DataError or anything else the library raises.
void RunCommand(const Invocation& inv);

}  // namespace moto::cli

#endif  // MOTO_TOOLS_CLI_COMMANDS_H_
