#ifndef MOTO_TOOLS_CLI_RUN_CONFIG_H_
#define MOTO_TOOLS_CLI_RUN_CONFIG_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "moto/distance.h"
#include "moto/motif.h"
#include "moto/team.h"
#include "moto/trac.h"

namespace moto::cli {

// Bad flags, unknown keys, malformed values. Exit status 1.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Unreadable or inconsistent input data. Exit status 2.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ConfigKey {
  std::string name;
  std::string default_value;
  std::string help;
};

// Every recognised key with its default, in manifest order.
const std::vector<ConfigKey>& ConfigKeys();

// Window-specific d_c values, keyed "YYYY-YYYY".
const std::map<std::string, double>& CutoffPresets();

// Resolved key=value configuration. Values are validated on Set, so typed
// accessors only fail on programming errors.
class RunConfig {
 public:
  RunConfig();

  // Throws UsageError for unknown keys or values outside their range.
  void Set(const std::string& key, const std::string& value);
  // `key=value` form used by --set.
  void SetAssignment(const std::string& assignment);
  // One key=value per line; blank lines and lines starting with # ignored.
  void Load(std::istream& in, const std::string& origin);
  void LoadFile(const std::string& path);

  const std::string& Get(const std::string& key) const;
  double GetDouble(const std::string& key) const;
  long long GetInt(const std::string& key) const;
  bool GetBool(const std::string& key) const;
  const std::map<std::string, std::string>& values() const { return values_; }

  // Inclusive year window, or nullopt for "all".
  std::optional<std::pair<int, int>> Window() const;
  std::set<std::string> Fields() const;

  // The explicit d_c, or nullopt when it must be resolved from the graph
  // ("auto"). Presets resolve here.
  std::optional<double> FixedCutoff() const;

  RecognitionConfig Recognition(double d_c, unsigned workers) const;
  MotifParams Motif() const;
  TracConfig Trac() const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace moto::cli

#endif  // MOTO_TOOLS_CLI_RUN_CONFIG_H_
