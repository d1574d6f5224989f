#ifndef MOTO_TOOLS_CLI_ARTIFACTS_H_
#define MOTO_TOOLS_CLI_ARTIFACTS_H_

#include <sstream>
#include <string>
#include <deque>
#include <utility>
#include <vector>

namespace moto::cli {

std::string Sha256Hex(const std::string& bytes);

// Whole file contents; throws DataError when the file cannot be read.
std::string ReadFileOrThrow(const std::string& path);

// Output files buffered in memory and published together. Nothing touches
// the output directory until Commit; Commit writes every file to a
// temporary name first and renames them only once all writes succeeded.
class OutputSet {
 public:
  explicit OutputSet(std::string directory) : directory_(std::move(directory)) {}

  std::ostringstream& Add(const std::string& name);
  std::vector<std::string> names() const;

  // Throws DataError on I/O failure, after removing any temporaries.
  void Commit();

 private:
  std::string directory_;
  // deque keeps references returned by Add valid.
  std::deque<std::pair<std::string, std::ostringstream>> files_;
};

}  // namespace moto::cli

#endif  // MOTO_TOOLS_CLI_ARTIFACTS_H_
