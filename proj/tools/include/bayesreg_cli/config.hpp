#pragma once

#include <bayesreg/samplers.hpp>

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace bayesreg::cli {

enum class Command { Fit, RiskSim, ReproducePaper, ConditionScan, Contours };

std::string to_string(Command c);

/// Everything a subcommand needs. Loaded from an optional JSON file first;
/// command-line flags then override individual fields.
struct RunConfig {
  Command command = Command::Fit;
  std::string input_path;
  std::string output_dir = "out";
  std::string prior = "all";
  std::size_t iters = 10000;
  std::size_t burn_in = 2000;
  std::size_t thin = 1;
  std::uint64_t seed = 1;
  std::size_t chains = 1;
  std::string lambda_mode = "hyper";
  unsigned workers = 0;  ///< 0 selects the logical core count

  // fit
  bool synthetic = false;
  std::size_t n = 100;
  double kappa = 1.0;
  double ridge_lambda = 1.0;
  double theta = 0.5;
  double sigma2_slab = 1.0;

  // risk-sim
  std::size_t p = 10;
  std::size_t r = 0;
  std::optional<double> d;
  std::size_t replications = 100000;
  std::optional<double> threshold;
  bool positive_part = false;

  // condition-scan
  double eps_min = 1e-3;
  double eps_max = 10.0;
  std::size_t eps_points = 50;
  double alpha = 1.0;

  // contours
  double tau = 1.0;
  double grid_min = -2.0;
  double grid_max = 2.0;
  std::size_t grid_points = 81;
  std::optional<double> budget;

  // reproduce-paper
  std::size_t seeds = 20;

  RunLength run_length() const { return {iters, burn_in, thin}; }
  LambdaMode parsed_lambda_mode() const;
  unsigned effective_workers() const;
};

/// Canonical JSON of the fields that influence results. The output directory
/// and worker count are excluded.
nlohmann::json canonical_json(const RunConfig& c);

/// FNV-1a 64 of the canonical JSON, as 16 hex digits.
std::string config_hash(const RunConfig& c);

/// Applies keys of a JSON config object (flag names without the leading
/// dashes, e.g. "burn-in") to `c`. Throws ValidationError on unknown keys or
/// wrong types and IoError when the file cannot be read.
void apply_config_file(const std::filesystem::path& path, RunConfig& c);
void apply_config_json(const nlohmann::json& j, RunConfig& c);

/// Validation shared by every subcommand; throws ValidationError.
void validate(const RunConfig& c);

}  // namespace bayesreg::cli
