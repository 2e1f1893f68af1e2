#include "bayesreg_cli/commands.hpp"

#include "bayesreg_cli/artifacts.hpp"
#include "bayesreg_cli/csv.hpp"
#include "bayesreg_cli/reproduce.hpp"
#include "bayesreg_cli/synthetic.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/parallel.hpp>
#include <bayesreg/priors.hpp>
#include <bayesreg/risk_lab.hpp>
#include <bayesreg/summary.hpp>
#include <bayesreg/version.hpp>

#include <CLI11.hpp>

#include <cmath>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

namespace bayesreg::cli {

namespace {

using nlohmann::json;

constexpr std::uint64_t kStreamsPerMethod = 1000;

std::string fmt(double v) { return format_number(v); }
std::string fmt(std::optional<double> v) { return v ? format_number(*v) : std::string(); }

json summary_json(const DrawSummary& s) {
  json j = json::object();
  set_number(j, "mean", s.mean);
  set_number(j, "median", s.median);
  set_number(j, "mode", s.mode);
  set_number(j, "lower95", s.lower);
  set_number(j, "upper95", s.upper);
  set_number(j, "ess", s.ess);
  return j;
}

std::vector<SamplerKind> requested_samplers(const std::string& prior) {
  if (prior == "all") return {SamplerKind::Lasso, SamplerKind::Horseshoe, SamplerKind::SpikeSlab};
  if (prior == "lasso") return {SamplerKind::Lasso};
  if (prior == "horseshoe") return {SamplerKind::Horseshoe};
  if (prior == "spike-slab") return {SamplerKind::SpikeSlab};
  return {};
}

std::uint64_t stream_base(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::Lasso:
      return 1 * kStreamsPerMethod;
    case SamplerKind::Horseshoe:
      return 2 * kStreamsPerMethod;
    case SamplerKind::SpikeSlab:
      return 3 * kStreamsPerMethod;
  }
  return 0;
}

std::string samples_csv(const ArtifactMeta& meta, const std::vector<PosteriorSamples>& runs,
                        const std::vector<std::size_t>& chain_of, Index p) {
  std::ostringstream os;
  os << meta.csv_header() << "# scale=standardized\n";
  os << "method,chain,draw";
  for (Index j = 1; j <= p; ++j) os << ",beta_" << j;
  os << ",sigma2";
  for (Index j = 1; j <= p; ++j) os << ",scale_" << j;
  os << ",global_scale";
  for (Index j = 1; j <= p; ++j) os << ",gamma_" << j;
  os << "\n";
  for (std::size_t k = 0; k < runs.size(); ++k) {
    const PosteriorSamples& s = runs[k];
    for (std::size_t draw = 0; draw < s.states.size(); ++draw) {
      const ChainState& st = s.states[draw];
      os << to_string(s.sampler) << ',' << chain_of[k] << ',' << draw;
      for (Index j = 0; j < p; ++j) os << ',' << fmt(st.beta(j));
      os << ',' << fmt(st.sigma2);
      const VectorXd* local = s.sampler == SamplerKind::Lasso       ? &st.tau2
                              : s.sampler == SamplerKind::Horseshoe ? &st.lambda2
                                                                    : nullptr;
      for (Index j = 0; j < p; ++j) os << ',' << (local ? fmt((*local)(j)) : std::string());
      os << ',';
      if (s.sampler == SamplerKind::Lasso) os << fmt(st.lambda_shrink);
      if (s.sampler == SamplerKind::Horseshoe) os << fmt(st.tau2_global);
      for (Index j = 0; j < p; ++j) os << ',' << (st.gamma.size() == p ? std::to_string(st.gamma(j)) : std::string());
      os << "\n";
    }
  }
  return os.str();
}

Dataset load_fit_data(const RunConfig& config, ArtifactWriter& writer, const ArtifactMeta& meta) {
  if (!config.synthetic) {
    CsvTable table = load_csv(config.input_path);
    return standardize(std::move(table.x), std::move(table.y));
  }
  SyntheticSpec spec = SyntheticSpec::sparse_ten();
  spec.n = config.n;
  spec.kappa = config.kappa;
  RngStream rng(config.seed, 0);
  SyntheticData synth = generate_synthetic(rng, spec);

  std::ostringstream truth;
  truth << meta.csv_header() << "coefficient,beta_true\n";
  for (Index j = 0; j < synth.beta_true.size(); ++j) truth << j + 1 << ',' << fmt(synth.beta_true(j)) << "\n";
  writer.stage("truth.csv", truth.str());

  std::ostringstream data;
  data << meta.csv_header();
  for (Index j = 1; j <= synth.data.p(); ++j) data << 'x' << j << ',';
  data << "y\n";
  for (Index i = 0; i < synth.data.n(); ++i) {
    for (Index j = 0; j < synth.data.p(); ++j) data << fmt(synth.data.x_raw()(i, j)) << ',';
    data << fmt(synth.data.y_raw()(i)) << "\n";
  }
  writer.stage("data.csv", data.str());
  return std::move(synth.data);
}

}  // namespace

int cmd_fit(const RunConfig& config, std::ostream& out) {
  validate(config);
  ArtifactWriter writer(config.output_dir);
  const ArtifactMeta meta = ArtifactMeta::from(config);
  const Dataset d = load_fit_data(config, writer, meta);
  const Index p = d.p();

  std::optional<LinearFit> ols;
  std::string ols_reason;
  try {
    ols = ols_fit(d);
  } catch (const SingularDesign& e) {
    ols_reason = e.what();
  }
  const bool want_ridge = config.prior == "ridge" || config.prior == "all";
  std::optional<LinearFit> ridge;
  if (want_ridge) ridge = ridge_fit(d, config.ridge_lambda);

  // one task per (sampler, chain); each owns its stream
  const std::vector<SamplerKind> kinds = requested_samplers(config.prior);
  const SufficientStats stats = SufficientStats::from(d);
  const RunLength run = config.run_length();
  LassoOptions lasso_opts;
  lasso_opts.lambda_mode = config.parsed_lambda_mode();
  SpikeSlabOptions slab_opts;
  slab_opts.theta = config.theta;
  slab_opts.sigma2_slab = config.sigma2_slab;

  std::vector<PosteriorSamples> chains(kinds.size() * config.chains,
                                       PosteriorSamples{SamplerKind::Lasso, PriorSpec::ridge(1.0), {}, run, 0, 0, 0.0});
  std::vector<std::size_t> chain_of(chains.size());
  parallel_for(chains.size(), config.effective_workers(), [&](std::size_t task) {
    const SamplerKind kind = kinds[task / config.chains];
    const std::size_t c = task % config.chains;
    chain_of[task] = c;
    const RngStream rng(config.seed, stream_base(kind) + c);
    switch (kind) {
      case SamplerKind::Lasso:
        chains[task] = lasso_gibbs_run(rng, stats, lasso_gibbs_init(stats), run, lasso_opts);
        break;
      case SamplerKind::Horseshoe:
        chains[task] = horseshoe_gibbs_run(rng, stats, horseshoe_gibbs_init(stats), run);
        break;
      case SamplerKind::SpikeSlab:
        chains[task] = spike_slab_gibbs_run(rng, stats, spike_slab_gibbs_init(stats, slab_opts), run, slab_opts);
        break;
    }
  });

  json summary;
  summary["meta"] = meta.to_json();
  summary["scale"] = "original";
  summary["n"] = d.n();
  summary["p"] = p;
  json methods = json::object();
  if (ols) {
    json m;
    m["coefficients"] = json::array();
    for (Index j = 0; j < p; ++j) {
      json c{{"index", j + 1}};
      set_number(c, "estimate", ols->beta_raw(j));
      m["coefficients"].push_back(c);
    }
    set_number(m, "intercept", ols->intercept);
    methods["ols"] = m;
  } else {
    methods["ols"] = {{"value", nullptr}, {"reason", ols_reason}};
  }
  if (ridge) {
    json m;
    set_number(m, "lambda", ridge->lambda);
    m["coefficients"] = json::array();
    for (Index j = 0; j < p; ++j) {
      json c{{"index", j + 1}};
      set_number(c, "estimate", ridge->beta_raw(j));
      m["coefficients"].push_back(c);
    }
    set_number(m, "intercept", ridge->intercept);
    methods["ridge"] = m;
  }

  std::ostringstream est;
  est << meta.csv_header() << "coefficient,method,estimate,mean,median,lower95,upper95,inclusion_prob,ols\n";
  std::vector<std::pair<std::string, SummaryReport>> reports;
  for (std::size_t k = 0; k < kinds.size(); ++k) {
    std::vector<PosteriorSamples> mine(chains.begin() + static_cast<std::ptrdiff_t>(k * config.chains),
                                       chains.begin() + static_cast<std::ptrdiff_t>((k + 1) * config.chains));
    const SummaryReport rep = summarize(concatenate(mine), d);
    json m;
    m["retained"] = rep.retained;
    m["chains"] = config.chains;
    m["coefficients"] = json::array();
    for (Index j = 0; j < p; ++j) {
      json c = summary_json(rep.coefficients[static_cast<std::size_t>(j)]);
      c["index"] = j + 1;
      if (rep.inclusion) set_number(c, "inclusion_prob", (*rep.inclusion)[static_cast<std::size_t>(j)]);
      m["coefficients"].push_back(c);
    }
    m["sigma2"] = summary_json(rep.sigma2);
    methods[std::string(to_string(kinds[k]))] = m;
    reports.emplace_back(std::string(to_string(kinds[k])), rep);
  }
  summary["methods"] = methods;

  for (Index j = 0; j < p; ++j) {
    const std::string ols_cell = ols ? fmt(ols->beta_raw(j)) : std::string();
    if (ridge) est << j + 1 << ",ridge," << fmt(ridge->beta_raw(j)) << ",,,,,," << ols_cell << "\n";
    for (const auto& [name, rep] : reports) {
      const DrawSummary& s = rep.coefficients[static_cast<std::size_t>(j)];
      est << j + 1 << ',' << name << ',' << fmt(s.mode) << ',' << fmt(s.mean) << ',' << fmt(s.median) << ','
          << fmt(s.lower) << ',' << fmt(s.upper) << ','
          << (rep.inclusion ? fmt((*rep.inclusion)[static_cast<std::size_t>(j)]) : std::string()) << ','
          << ols_cell << "\n";
    }
  }

  writer.stage("samples.csv", samples_csv(meta, chains, chain_of, p));
  writer.stage("summary.json", summary.dump(2) + "\n");
  writer.stage("estimates.csv", est.str());
  writer.commit();

  out << "fit: n=" << d.n() << " p=" << p << " prior=" << config.prior << " -> " << writer.dir().string() << "\n";
  return kExitOk;
}

int cmd_risk_sim(const RunConfig& config, std::ostream& out) {
  validate(config);
  if (config.p < 3) throw DimensionTooSmall(config.p, 3);
  ArtifactWriter writer(config.output_dir);
  const ArtifactMeta meta = ArtifactMeta::from(config);
  ExperimentOptions opts;
  opts.positive_part = config.positive_part;
  opts.threshold = config.threshold;
  opts.workers = config.effective_workers();
  const double d = config.d.value_or(static_cast<double>(config.r));
  const auto rows = js_vs_threshold_experiment(RngStream(config.seed, 0), config.p, config.r, d,
                                               config.replications, opts);

  std::ostringstream csv;
  csv << meta.csv_header() << "estimator,risk,se,lower,upper\n";
  for (const RiskReport& r : rows) {
    csv << r.estimator << ',' << fmt(r.mc_risk) << ',' << fmt(r.mc_se) << ',' << fmt(r.lower_bound) << ','
        << fmt(r.upper_bound) << "\n";
  }
  writer.stage("risk.csv", csv.str());
  writer.commit();

  out << "risk-sim: p=" << config.p << " r=" << config.r << " d=" << d << " replications=" << config.replications
      << "\n";
  for (const RiskReport& r : rows) {
    out << "  " << std::left << std::setw(16) << r.estimator << std::right << std::setw(12) << r.mc_risk
        << "  se " << r.mc_se << "\n";
  }
  return kExitOk;
}

int cmd_reproduce_paper(const RunConfig& config, std::ostream& out) {
  validate(config);
  ArtifactWriter writer(config.output_dir);
  const ArtifactMeta meta = ArtifactMeta::from(config);
  ReproductionOptions opts;
  opts.seeds = ReproductionOptions::seed_range(config.seed, config.seeds);
  opts.spec.n = config.n;
  opts.spec.kappa = config.kappa;
  opts.run = config.run_length();
  opts.ridge_lambda = config.ridge_lambda;
  opts.workers = config.effective_workers();
  const ReproductionReport rep = reproduce_paper(opts);

  std::ostringstream csv;
  csv << meta.csv_header() << "seed,coefficient,truth,ols,ridge,lasso,horseshoe\n";
  for (const SeedResult& s : rep.seeds) {
    for (Index j = 0; j < s.truth.size(); ++j) {
      csv << s.seed << ',' << j + 1 << ',' << fmt(s.truth(j)) << ',' << fmt(s.ols(j)) << ',' << fmt(s.ridge(j))
          << ',' << fmt(s.lasso(j)) << ',' << fmt(s.horseshoe(j)) << "\n";
    }
  }

  json acc;
  acc["meta"] = meta.to_json();
  acc["criteria"] = {{"zero_tolerance", opts.criteria.zero_tolerance},
                     {"min_zero_passes_of_20", opts.criteria.min_zero_passes},
                     {"nonzero_tolerance", opts.criteria.nonzero_tolerance}};
  acc["seeds"] = json::array();
  for (const SeedResult& s : rep.seeds) {
    json j{{"seed", s.seed},
           {"horseshoe_zeros_within_tolerance", s.zeros_within(opts.criteria.zero_tolerance)},
           {"horseshoe_median_below_lasso", s.beats_lasso()},
           {"horseshoe_median_below_ridge", s.beats_ridge()}};
    set_number(j, "horseshoe_max_abs_zero", s.horseshoe_max_zero);
    set_number(j, "horseshoe_median_abs_zero", s.horseshoe_median_zero);
    set_number(j, "lasso_median_abs_zero", s.lasso_median_zero);
    set_number(j, "ridge_median_abs_zero", s.ridge_median_zero);
    acc["seeds"].push_back(j);
  }
  acc["recovery"] = json::array();
  for (const MethodRecovery& m : rep.recovery) {
    json j{{"method", m.method}, {"within_tolerance", m.within}};
    j["mean_error"] = std::vector<double>(m.mean_error.data(), m.mean_error.data() + m.mean_error.size());
    acc["recovery"].push_back(j);
  }
  acc["zero_passes"] = rep.zero_passes;
  acc["zeros_ok"] = rep.zeros_ok;
  acc["medians_ok"] = rep.medians_ok;
  acc["nonzero_ok"] = rep.nonzero_ok;
  acc["passed"] = rep.passed();

  writer.stage("estimates.csv", csv.str());
  writer.stage("acceptance.json", acc.dump(2) + "\n");
  writer.commit();

  out << "reproduce-paper: " << rep.seeds.size() << " seeds\n";
  out << "  horseshoe zeros within " << opts.criteria.zero_tolerance << ": " << rep.zero_passes << "/"
      << rep.seeds.size() << (rep.zeros_ok ? " PASS" : " FAIL") << "\n";
  out << "  horseshoe median |mode| below lasso and ridge on every seed:" << (rep.medians_ok ? " PASS" : " FAIL")
      << "\n";
  for (const MethodRecovery& m : rep.recovery) {
    out << "  " << m.method << " mean error on nonzeros: " << m.mean_error.transpose()
        << (m.within ? " PASS" : " FAIL") << "\n";
  }
  out << "  overall: " << (rep.passed() ? "PASS" : "FAIL") << "\n";
  return rep.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_condition_scan(const RunConfig& config, std::ostream& out) {
  validate(config);
  ArtifactWriter writer(config.output_dir);
  const ArtifactMeta meta = ArtifactMeta::from(config);
  const std::vector<double> grid = log_space(config.eps_min, config.eps_max, config.eps_points);
  const auto rows = condition_scan(grid, config.alpha);

  std::ostringstream csv;
  csv << meta.csv_header() << "eps,kappa,kappa_shifted,kappa_closed_form\n";
  for (const ConditionScanRow& r : rows) {
    csv << fmt(r.eps) << ',' << fmt(r.kappa) << ',' << fmt(r.kappa_shifted) << ',' << fmt(r.kappa_closed_form)
        << "\n";
  }
  writer.stage("condition.csv", csv.str());
  writer.commit();
  out << "condition-scan: " << rows.size() << " rows, alpha=" << config.alpha << "\n";
  return kExitOk;
}

int cmd_contours(const RunConfig& config, std::ostream& out) {
  validate(config);
  ArtifactWriter writer(config.output_dir);
  const ArtifactMeta meta = ArtifactMeta::from(config);
  const std::string& name = config.prior;
  const PriorSpec prior = name == "ridge"       ? PriorSpec::ridge(config.tau)
                          : name == "lasso"     ? PriorSpec::lasso(config.tau)
                          : name == "cauchy"    ? PriorSpec::cauchy(config.tau)
                          : name == "horseshoe" ? PriorSpec::horseshoe(config.tau)
                                                : PriorSpec::spike_slab(config.theta, std::sqrt(config.sigma2_slab));
  const GridSpec grid{config.grid_min, config.grid_max, config.grid_points};
  const PenaltyGrid pg = penalty_contours(prior, grid, config.budget.value_or(default_budget(prior)));

  std::ostringstream csv;
  csv << meta.csv_header() << "beta1,beta2,value\n";
  for (std::size_t i = 0; i < pg.beta_grid.size(); ++i) {
    for (std::size_t j = 0; j < pg.beta_grid.size(); ++j) {
      csv << fmt(pg.beta_grid[i]) << ',' << fmt(pg.beta_grid[j]) << ',' << fmt(pg.at(i, j)) << "\n";
    }
  }
  std::ostringstream level;
  level << meta.csv_header() << "# budget=" << fmt(pg.budget) << "\nbeta1,beta2\n";
  for (const auto& [b1, b2] : pg.level_set) level << fmt(b1) << ',' << fmt(b2) << "\n";
  writer.stage("contours.csv", csv.str());
  writer.stage("level_set.csv", level.str());
  writer.commit();
  out << "contours: prior=" << name << " grid=" << pg.beta_grid.size() << "x" << pg.beta_grid.size()
      << " level-set points=" << pg.level_set.size() << "\n";
  return kExitOk;
}

namespace {

void add_run_options(CLI::App* sub, RunConfig& c) {
  sub->add_option("--iters", c.iters, "Gibbs sweeps per chain");
  sub->add_option("--burn-in", c.burn_in, "Sweeps discarded before retention");
  sub->add_option("--thin", c.thin, "Keep every k-th sweep after burn-in");
}

void add_common(CLI::App* sub, RunConfig& c) {
  sub->add_option("--seed", c.seed, "Root seed for every random stream");
  sub->add_option("--out", c.output_dir, "Output directory");
  sub->add_option("--workers", c.workers, "Worker threads (0 = logical cores)");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    // the JSON config is applied first so that flags override it
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--config" && i + 1 < args.size()) apply_config_file(args[i + 1], config);
      if (args[i].rfind("--config=", 0) == 0) apply_config_file(args[i].substr(9), config);
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kExitIo;
  }

  CLI::App app{"Bayesian regularization toolkit for linear regression"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  std::string config_path;
  app.add_option("--config", config_path, "JSON config file; flags override its values");

  auto* fit = app.add_subcommand("fit", "Fit OLS, ridge and Gibbs-sampled priors to a CSV or synthetic data");
  fit->add_option("--input", config.input_path, "CSV with header; last column is the response");
  fit->add_flag("--synthetic", config.synthetic, "Generate the ten-coefficient sparse problem instead");
  fit->add_option("--prior", config.prior, "ridge|lasso|horseshoe|spike-slab|all");
  fit->add_option("--chains", config.chains, "Independent chains per sampler");
  fit->add_option("--lambda-mode", config.lambda_mode, "Lasso rate: fixed:<v> or hyper");
  fit->add_option("--ridge-lambda", config.ridge_lambda, "Ridge penalty weight");
  fit->add_option("--theta", config.theta, "Spike-and-slab prior inclusion probability");
  fit->add_option("--sigma2-slab", config.sigma2_slab, "Spike-and-slab slab variance");
  fit->add_option("--n", config.n, "Rows of synthetic data");
  fit->add_option("--kappa", config.kappa, "Synthetic noise multiplier");
  add_run_options(fit, config);
  add_common(fit, config);

  auto* risk = app.add_subcommand("risk-sim", "Monte Carlo risk of James-Stein and thresholding rules");
  risk->add_option("--p", config.p, "Dimension");
  risk->add_option("--r", config.r, "Number of spikes");
  risk->add_option_function<double>("--d", [&](const double& v) { config.d = v; }, "Signal energy (default r)");
  risk->add_option("--replications", config.replications, "Monte Carlo replications (>= 1000)");
  risk->add_option_function<double>("--threshold", [&](const double& v) { config.threshold = v; },
                                    "Threshold (default sqrt(2 log p))");
  risk->add_flag("--positive-part", config.positive_part, "Also report positive-part James-Stein");
  add_common(risk, config);

  auto* repro = app.add_subcommand("reproduce-paper", "Sparse ten-coefficient comparison over many seeds");
  repro->add_option("--seeds", config.seeds, "Number of consecutive seeds starting at --seed");
  repro->add_option("--n", config.n, "Rows per synthetic dataset");
  repro->add_option("--kappa", config.kappa, "Noise multiplier");
  repro->add_option("--ridge-lambda", config.ridge_lambda, "Ridge penalty weight");
  add_run_options(repro, config);
  add_common(repro, config);

  auto* cond = app.add_subcommand("condition-scan", "Condition numbers of the correlated 2x2 design");
  cond->add_option("--eps-min", config.eps_min, "Smallest eps");
  cond->add_option("--eps-max", config.eps_max, "Largest eps");
  cond->add_option("--eps-points", config.eps_points, "Log-spaced grid size");
  cond->add_option("--alpha", config.alpha, "Spectrum shift");
  add_common(cond, config);

  auto* cont = app.add_subcommand("contours", "Penalty surfaces and level sets on a 2-D grid");
  cont->add_option("--prior", config.prior, "ridge|lasso|cauchy|horseshoe|spike-slab")->required();
  cont->add_option("--tau", config.tau, "Scale of ridge/lasso/cauchy/horseshoe");
  cont->add_option("--theta", config.theta, "Spike-and-slab inclusion probability");
  cont->add_option("--sigma2-slab", config.sigma2_slab, "Spike-and-slab slab variance");
  cont->add_option("--grid-min", config.grid_min, "Lower grid bound");
  cont->add_option("--grid-max", config.grid_max, "Upper grid bound");
  cont->add_option("--grid-points", config.grid_points, "Points per axis");
  cont->add_option_function<double>("--budget", [&](const double& v) { config.budget = v; },
                                    "Level-set budget (default 2 phi(1/sqrt 2))");
  add_common(cont, config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream msg;
    const int code = app.exit(e, out, msg);
    err << msg.str();
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (fit->parsed()) {
      config.command = Command::Fit;
      return cmd_fit(config, out);
    }
    if (risk->parsed()) {
      config.command = Command::RiskSim;
      return cmd_risk_sim(config, out);
    }
    if (repro->parsed()) {
      config.command = Command::ReproducePaper;
      return cmd_reproduce_paper(config, out);
    }
    if (cond->parsed()) {
      config.command = Command::ConditionScan;
      return cmd_condition_scan(config, out);
    }
    config.command = Command::Contours;
    return cmd_contours(config, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::Validation:
        return kExitUsage;
      case ErrorKind::Io:
        return kExitIo;
      case ErrorKind::Numerical:
        return kExitNumerical;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kExitNumerical;
}

}  // namespace bayesreg::cli
