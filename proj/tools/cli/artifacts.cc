#include "cli/artifacts.h"

#include <openssl/evp.h>
#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <iterator>

#include "cli/run_config.h"

namespace moto::cli {

namespace fs = std::filesystem;

std::string Sha256Hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 digest failed");
  }
  static const char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xf]);
  }
  return out;
}

std::string ReadFileOrThrow(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read " + path);
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) throw DataError("error while reading " + path);
  return bytes;
}

std::ostringstream& OutputSet::Add(const std::string& name) {
  files_.emplace_back(name, std::ostringstream{});
  return files_.back().second;
}

std::vector<std::string> OutputSet::names() const {
  std::vector<std::string> out;
  for (const auto& f : files_) out.push_back(f.first);
  return out;
}

void OutputSet::Commit() {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw DataError("cannot create " + directory_ + ": " + ec.message());

  const std::string suffix = ".tmp." + std::to_string(::getpid());
  std::vector<fs::path> temps;
  auto cleanup = [&] {
    for (const fs::path& p : temps) fs::remove(p, ec);
  };
  for (const auto& [name, content] : files_) {
    fs::path tmp = fs::path(directory_) / ("." + name + suffix);
    temps.push_back(tmp);
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << content.str();
    out.close();
    if (!out) {
      cleanup();
      throw DataError("cannot write " + tmp.string());
    }
  }
  for (std::size_t k = 0; k < files_.size(); ++k) {
    fs::rename(temps[k], fs::path(directory_) / files_[k].first, ec);
    if (ec) {
      cleanup();
      throw DataError("cannot publish " + files_[k].first + ": " + ec.message());
    }
  }
}

}  // namespace moto::cli
