#include "bayesreg_cli/config.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/parallel.hpp>

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>

namespace bayesreg::cli {

using nlohmann::json;

std::string to_string(Command c) {
  switch (c) {
    case Command::Fit:
      return "fit";
    case Command::RiskSim:
      return "risk-sim";
    case Command::ReproducePaper:
      return "reproduce-paper";
    case Command::ConditionScan:
      return "condition-scan";
    case Command::Contours:
      return "contours";
  }
  return "unknown";
}

LambdaMode RunConfig::parsed_lambda_mode() const {
  if (lambda_mode == "hyper") return LambdaMode::hyper();
  constexpr std::string_view prefix = "fixed:";
  if (lambda_mode.rfind(prefix, 0) == 0) {
    const std::string_view rest = std::string_view(lambda_mode).substr(prefix.size());
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), v);
    if (ec == std::errc() && ptr == rest.data() + rest.size() && v > 0.0) return LambdaMode::fixed_at(v);
  }
  throw ValidationError("--lambda-mode must be 'hyper' or 'fixed:<positive value>', got '" + lambda_mode + "'");
}

unsigned RunConfig::effective_workers() const { return workers == 0 ? default_workers() : workers; }

json canonical_json(const RunConfig& c) {
  json j;
  j["command"] = to_string(c.command);
  j["input"] = c.input_path;
  j["prior"] = c.prior;
  j["iters"] = c.iters;
  j["burn-in"] = c.burn_in;
  j["thin"] = c.thin;
  j["seed"] = c.seed;
  j["chains"] = c.chains;
  j["lambda-mode"] = c.lambda_mode;
  j["synthetic"] = c.synthetic;
  j["n"] = c.n;
  j["kappa"] = c.kappa;
  j["ridge-lambda"] = c.ridge_lambda;
  j["theta"] = c.theta;
  j["sigma2-slab"] = c.sigma2_slab;
  j["p"] = c.p;
  j["r"] = c.r;
  j["d"] = c.d ? json(*c.d) : json(nullptr);
  j["replications"] = c.replications;
  j["threshold"] = c.threshold ? json(*c.threshold) : json(nullptr);
  j["positive-part"] = c.positive_part;
  j["eps-min"] = c.eps_min;
  j["eps-max"] = c.eps_max;
  j["eps-points"] = c.eps_points;
  j["alpha"] = c.alpha;
  j["tau"] = c.tau;
  j["grid-min"] = c.grid_min;
  j["grid-max"] = c.grid_max;
  j["grid-points"] = c.grid_points;
  j["budget"] = c.budget ? json(*c.budget) : json(nullptr);
  j["seeds"] = c.seeds;
  return j;
}

std::string config_hash(const RunConfig& c) {
  const std::string text = canonical_json(c).dump();
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

void apply_config_json(const json& j, RunConfig& c) {
  if (!j.is_object()) throw ValidationError("config file must hold a JSON object");
  try {
    for (const auto& [key, value] : j.items()) {
      if (key == "input") c.input_path = value.get<std::string>();
      else if (key == "out") c.output_dir = value.get<std::string>();
      else if (key == "prior") c.prior = value.get<std::string>();
      else if (key == "iters") c.iters = value.get<std::size_t>();
      else if (key == "burn-in") c.burn_in = value.get<std::size_t>();
      else if (key == "thin") c.thin = value.get<std::size_t>();
      else if (key == "seed") c.seed = value.get<std::uint64_t>();
      else if (key == "chains") c.chains = value.get<std::size_t>();
      else if (key == "lambda-mode") c.lambda_mode = value.get<std::string>();
      else if (key == "workers") c.workers = value.get<unsigned>();
      else if (key == "synthetic") c.synthetic = value.get<bool>();
      else if (key == "n") c.n = value.get<std::size_t>();
      else if (key == "kappa") c.kappa = value.get<double>();
      else if (key == "ridge-lambda") c.ridge_lambda = value.get<double>();
      else if (key == "theta") c.theta = value.get<double>();
      else if (key == "sigma2-slab") c.sigma2_slab = value.get<double>();
      else if (key == "p") c.p = value.get<std::size_t>();
      else if (key == "r") c.r = value.get<std::size_t>();
      else if (key == "d") c.d = value.get<double>();
      else if (key == "replications") c.replications = value.get<std::size_t>();
      else if (key == "threshold") c.threshold = value.get<double>();
      else if (key == "positive-part") c.positive_part = value.get<bool>();
      else if (key == "eps-min") c.eps_min = value.get<double>();
      else if (key == "eps-max") c.eps_max = value.get<double>();
      else if (key == "eps-points") c.eps_points = value.get<std::size_t>();
      else if (key == "alpha") c.alpha = value.get<double>();
      else if (key == "tau") c.tau = value.get<double>();
      else if (key == "grid-min") c.grid_min = value.get<double>();
      else if (key == "grid-max") c.grid_max = value.get<double>();
      else if (key == "grid-points") c.grid_points = value.get<std::size_t>();
      else if (key == "budget") c.budget = value.get<double>();
      else if (key == "seeds") c.seeds = value.get<std::size_t>();
      else throw ValidationError("unknown config key '" + key + "'");
    }
  } catch (const json::exception& e) {
    throw ValidationError(std::string("config file: ") + e.what());
  }
}

void apply_config_file(const std::filesystem::path& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("config file '" + path.string() + "' is not valid JSON: " + e.what());
  }
  apply_config_json(j, c);
}

void validate(const RunConfig& c) {
  static const std::set<std::string> fit_priors = {"ridge", "lasso", "horseshoe", "spike-slab", "all"};
  static const std::set<std::string> contour_priors = {"ridge", "lasso", "cauchy", "horseshoe", "spike-slab"};
  switch (c.command) {
    case Command::Fit:
      if (!fit_priors.count(c.prior)) throw ValidationError("unknown prior '" + c.prior + "'");
      if (c.input_path.empty() == !c.synthetic) {
        throw ValidationError("fit needs exactly one of --input or --synthetic");
      }
      if (c.chains < 1) throw ValidationError("--chains must be at least 1");
      c.run_length().validate();
      (void)c.parsed_lambda_mode();
      break;
    case Command::ReproducePaper:
      if (c.seeds < 1) throw ValidationError("--seeds must be at least 1");
      c.run_length().validate();
      break;
    case Command::RiskSim:
      if (c.r > c.p) throw ValidationError("--r cannot exceed --p");
      break;
    case Command::ConditionScan:
      if (!(c.eps_min > 0.0 && c.eps_max >= c.eps_min)) throw ValidationError("need 0 < eps-min <= eps-max");
      if (c.eps_points < 1) throw ValidationError("--eps-points must be at least 1");
      if (!(c.alpha >= 0.0)) throw ValidationError("--alpha must be >= 0");
      break;
    case Command::Contours:
      if (!contour_priors.count(c.prior)) throw ValidationError("unknown contour prior '" + c.prior + "'");
      break;
  }
}

}  // namespace bayesreg::cli
