#include "bayesreg_cli/artifacts.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/version.hpp>

#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

namespace bayesreg::cli {

ArtifactMeta ArtifactMeta::from(const RunConfig& c) {
  return {c.seed, cli::config_hash(c), kVersion, to_string(c.command)};
}

std::string ArtifactMeta::csv_header() const {
  std::ostringstream os;
  os << "# bayesreg " << version << " command=" << command << " seed=" << seed
     << " config_hash=" << config_hash << "\n";
  return os.str();
}

nlohmann::json ArtifactMeta::to_json() const {
  return {{"toolkit", "bayesreg"},
          {"version", version},
          {"command", command},
          {"seed", seed},
          {"config_hash", config_hash}};
}

void set_number(nlohmann::json& obj, const std::string& key, double v) {
  if (std::isfinite(v)) {
    obj[key] = v;
    return;
  }
  obj[key] = nullptr;
  obj[key + "_reason"] = std::isnan(v) ? "not a number" : (v > 0 ? "positive infinity" : "negative infinity");
}

ArtifactWriter::ArtifactWriter(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::error_code ec;
  std::filesystem::create_directories(dir_, ec);
  if (ec || !std::filesystem::is_directory(dir_)) {
    throw IoError("cannot create output directory '" + dir_.string() + "'");
  }
  const auto probe = dir_ / ".bayesreg-write-probe";
  {
    std::ofstream out(probe);
    if (!out) throw IoError("output directory '" + dir_.string() + "' is not writable");
  }
  std::filesystem::remove(probe, ec);
}

void ArtifactWriter::stage(const std::string& name, std::string content) {
  staged_[name] = std::move(content);
}

void ArtifactWriter::commit() {
  for (const auto& [name, content] : staged_) {
    const auto path = dir_ / name;
    std::ofstream out(path, std::ios::binary);
    out << content;
    if (!out) throw IoError("failed to write '" + path.string() + "'");
  }
  staged_.clear();
}

}  // namespace bayesreg::cli
