#pragma once

#include "bayesreg_cli/config.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>

namespace bayesreg::cli {

struct ArtifactMeta {
  std::uint64_t seed = 0;
  std::string config_hash;
  std::string version;
  std::string command;

  static ArtifactMeta from(const RunConfig& c);
  /// "# bayesreg <version> command=<cmd> seed=<seed> config_hash=<hash>\n"
  std::string csv_header() const;
  nlohmann::json to_json() const;
};

/// Stores `v` under `key`; a non-finite value becomes null with a sibling
/// "<key>_reason" string, since JSON has no NaN or infinity literals.
void set_number(nlohmann::json& obj, const std::string& key, double v);

/// Output directory checked for writability up front. Files are staged in
/// memory and flushed together by `commit`, after all computation is done.
class ArtifactWriter {
 public:
  /// Creates the directory if needed and probes it; throws IoError.
  explicit ArtifactWriter(std::filesystem::path dir);

  void stage(const std::string& name, std::string content);
  /// Writes every staged file; throws IoError.
  void commit();
  const std::filesystem::path& dir() const noexcept { return dir_; }

 private:
  std::filesystem::path dir_;
  std::map<std::string, std::string> staged_;
};

}  // namespace bayesreg::cli
