#include "bayesreg/samplers.hpp"

#include "bayesreg/distributions.hpp"
#include "bayesreg/error.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace bayesreg {

namespace {

// caps prior precisions so A stays finite when a local scale collapses
constexpr double kMaxPrecision = 1e150;
constexpr double kMinVariance = 1e-300;

double clamp_variance(double v) { return v > kMinVariance ? v : kMinVariance; }

double precision_of(double variance) {
  const double inv = 1.0 / clamp_variance(variance);
  return inv < kMaxPrecision ? inv : kMaxPrecision;
}

double floored_square(double b) {
  const double a = std::abs(b) > kCoefficientFloor ? std::abs(b) : kCoefficientFloor;
  return a * a;
}

void require_dims(const ChainState& state, const SufficientStats& stats) {
  if (state.beta.size() != stats.p()) throw DimensionMismatch("chain state and data disagree on p");
}

template <typename Step>
PosteriorSamples run_chain(SamplerKind kind, PriorSpec prior, RngStream rng, ChainState state,
                           const RunLength& run, Step&& step) {
  run.validate();
  const auto start = std::chrono::steady_clock::now();
  PosteriorSamples out{kind, prior, {}, run, rng.seed(), rng.stream_id(), 0.0};
  out.states.reserve(run.retained());
  for (std::size_t it = 0; it < run.iters; ++it) {
    state = step(rng, state);
    if (it >= run.burn_in && (it - run.burn_in + 1) % run.thin == 0) out.states.push_back(state);
  }
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

VectorXd ridge_start(const SufficientStats& stats) {
  const MatrixXd a = stats.xtx + MatrixXd::Identity(stats.p(), stats.p());
  return a.llt().solve(stats.xty);
}

double initial_sigma2(const SufficientStats& stats, const VectorXd& beta) {
  if (stats.n <= 0) return 1.0;
  const double s2 = stats.residual_ss(beta) / static_cast<double>(stats.n);
  return s2 > 0.0 ? s2 : 1e-8;
}

}  // namespace

std::string_view to_string(SamplerKind kind) {
  switch (kind) {
    case SamplerKind::Lasso:
      return "lasso";
    case SamplerKind::Horseshoe:
      return "horseshoe";
    case SamplerKind::SpikeSlab:
      return "spike-slab";
  }
  return "unknown";
}

std::size_t RunLength::retained() const { return iters > burn_in ? (iters - burn_in) / thin : 0; }

void RunLength::validate() const {
  if (thin < 1) throw ValidationError("thin must be at least 1");
  if (!(iters > burn_in)) {
    std::ostringstream os;
    os << "iterations (" << iters << ") must exceed burn-in (" << burn_in << ")";
    throw ValidationError(os.str());
  }
}

MatrixXd PosteriorSamples::beta_draws() const {
  MatrixXd out(static_cast<Index>(states.size()), p());
  for (std::size_t k = 0; k < states.size(); ++k) out.row(static_cast<Index>(k)) = states[k].beta.transpose();
  return out;
}

VectorXd PosteriorSamples::sigma2_draws() const {
  VectorXd out(static_cast<Index>(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) out(static_cast<Index>(k)) = states[k].sigma2;
  return out;
}

PosteriorSamples concatenate(const std::vector<PosteriorSamples>& chains) {
  if (chains.empty()) throw ValidationError("no chains to concatenate");
  PosteriorSamples out = chains.front();
  for (std::size_t c = 1; c < chains.size(); ++c) {
    out.states.insert(out.states.end(), chains[c].states.begin(), chains[c].states.end());
    out.elapsed_seconds += chains[c].elapsed_seconds;
  }
  return out;
}

VectorXd draw_gaussian_precision(RngStream& rng, const MatrixXd& a, const VectorXd& b, double scale2) {
  const Index p = a.rows();
  const double max_diag = a.diagonal().cwiseAbs().maxCoeff();
  double jitter = 0.0;
  for (int attempt = 0; attempt < 6; ++attempt) {
    Eigen::LLT<MatrixXd> llt;
    if (jitter == 0.0) {
      llt.compute(a);
    } else {
      llt.compute(a + (jitter * max_diag) * MatrixXd::Identity(p, p));
    }
    if (llt.info() == Eigen::Success) {
      VectorXd mean = llt.solve(b);
      VectorXd z(p);
      for (Index j = 0; j < p; ++j) z(j) = rng.normal();
      // A = L L^T, so L^{-T} z has covariance A^{-1}
      const VectorXd w = llt.matrixU().solve(z);
      VectorXd draw = mean + std::sqrt(scale2) * w;
      if (draw.allFinite()) return draw;
    }
    jitter = jitter == 0.0 ? 1e-10 : jitter * 10.0;
  }
  throw NumericalBreakdown("posterior precision matrix is not positive definite");
}

// Bayesian lasso ------------------------------------------------------------

ChainState lasso_gibbs_init(const SufficientStats& stats) {
  const Index p = stats.p();
  ChainState s;
  s.beta = ridge_start(stats);
  for (Index j = 0; j < p; ++j) {
    if (s.beta(j) == 0.0) s.beta(j) = 1e-8;
  }
  s.sigma2 = initial_sigma2(stats, s.beta);
  s.tau2 = s.beta.array().square();
  s.lambda_shrink = static_cast<double>(p) * std::sqrt(s.sigma2) / s.beta.cwiseAbs().sum();
  return s;
}

ChainState lasso_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                            const LassoOptions& options) {
  require_dims(state, stats);
  const Index p = stats.p();
  ChainState next = state;
  if (options.lambda_mode.fixed) next.lambda_shrink = options.lambda_mode.value;

  VectorXd prior_precision(p);
  for (Index j = 0; j < p; ++j) prior_precision(j) = precision_of(next.tau2(j));

  MatrixXd a = stats.xtx;
  a.diagonal() += prior_precision;
  next.beta = draw_gaussian_precision(rng, a, stats.xty, next.sigma2);

  if (!options.freeze_sigma2) {
    const double shape = 0.5 * static_cast<double>(stats.n - 1) + 0.5 * static_cast<double>(p);
    const double rate = 0.5 * stats.residual_ss(next.beta) +
                        0.5 * next.beta.cwiseProduct(prior_precision).dot(next.beta);
    next.sigma2 = sample_inverse_gamma(rng, shape, rate);
  }

  if (!options.freeze_scales) {
    const double lambda2 = next.lambda_shrink * next.lambda_shrink;
    for (Index j = 0; j < p; ++j) {
      const double mu = std::sqrt(lambda2 * next.sigma2 / floored_square(next.beta(j)));
      const double inv_tau2 = sample_inverse_gaussian(rng, mu, lambda2);
      next.tau2(j) = clamp_variance(1.0 / inv_tau2);
    }
    if (!options.lambda_mode.fixed) {
      const double shape = static_cast<double>(p) + options.lambda_mode.a;
      const double rate = 0.5 * next.tau2.sum() + options.lambda_mode.b;
      next.lambda_shrink = std::sqrt(rng.gamma(shape, rate));
    }
  }
  return next;
}

PosteriorSamples lasso_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                 const RunLength& run, const LassoOptions& options) {
  require_dims(initial, stats);
  if (options.lambda_mode.fixed) initial.lambda_shrink = options.lambda_mode.value;
  const PriorSpec prior = PriorSpec::lasso(1.0 / initial.lambda_shrink);
  return run_chain(SamplerKind::Lasso, prior, rng, std::move(initial), run,
                   [&](RngStream& r, const ChainState& s) { return lasso_gibbs_step(r, s, stats, options); });
}

PosteriorSamples lasso_gibbs_run(RngStream rng, const Dataset& d, const RunLength& run,
                                 const LassoOptions& options) {
  const SufficientStats stats = SufficientStats::from(d);
  return lasso_gibbs_run(rng, stats, lasso_gibbs_init(stats), run, options);
}

// Horseshoe -----------------------------------------------------------------

ChainState horseshoe_gibbs_init(const SufficientStats& stats) {
  const Index p = stats.p();
  ChainState s;
  s.beta = ridge_start(stats);
  s.sigma2 = initial_sigma2(stats, s.beta);
  s.lambda2 = VectorXd::Ones(p);
  s.nu = VectorXd::Ones(p);
  s.tau2_global = 1.0;
  s.xi = 1.0;
  return s;
}

ChainState horseshoe_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                                const HorseshoeOptions& options) {
  require_dims(state, stats);
  const Index p = stats.p();
  ChainState next = state;

  VectorXd prior_precision(p);
  for (Index j = 0; j < p; ++j) prior_precision(j) = precision_of(next.tau2_global * next.lambda2(j));
  MatrixXd a = stats.xtx;
  a.diagonal() += prior_precision;
  next.beta = draw_gaussian_precision(rng, a, stats.xty, next.sigma2);

  if (!options.freeze_scales) {
    const double denom = 2.0 * next.tau2_global * next.sigma2;
    for (Index j = 0; j < p; ++j) {
      const double b2 = next.beta(j) * next.beta(j);
      next.lambda2(j) = clamp_variance(sample_inverse_gamma(rng, 1.0, 1.0 / next.nu(j) + b2 / denom));
    }
    for (Index j = 0; j < p; ++j) {
      next.nu(j) = sample_inverse_gamma(rng, 1.0, 1.0 + 1.0 / next.lambda2(j));
    }
    double weighted = 0.0;
    for (Index j = 0; j < p; ++j) weighted += next.beta(j) * next.beta(j) / next.lambda2(j);
    next.tau2_global = clamp_variance(sample_inverse_gamma(
        rng, 0.5 * static_cast<double>(p + 1), 1.0 / next.xi + weighted / (2.0 * next.sigma2)));
    next.xi = sample_inverse_gamma(rng, 1.0, 1.0 + 1.0 / next.tau2_global);
    for (Index j = 0; j < p; ++j) prior_precision(j) = precision_of(next.tau2_global * next.lambda2(j));
  }

  if (!options.freeze_sigma2) {
    const double shape = 0.5 * static_cast<double>(stats.n + p);
    const double rate = 0.5 * stats.residual_ss(next.beta) +
                        0.5 * next.beta.cwiseProduct(prior_precision).dot(next.beta);
    next.sigma2 = sample_inverse_gamma(rng, shape, rate);
  }
  return next;
}

PosteriorSamples horseshoe_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                     const RunLength& run, const HorseshoeOptions& options) {
  require_dims(initial, stats);
  return run_chain(SamplerKind::Horseshoe, PriorSpec::horseshoe(1.0), rng, std::move(initial), run,
                   [&](RngStream& r, const ChainState& s) { return horseshoe_gibbs_step(r, s, stats, options); });
}

PosteriorSamples horseshoe_gibbs_run(RngStream rng, const Dataset& d, const RunLength& run,
                                     const HorseshoeOptions& options) {
  const SufficientStats stats = SufficientStats::from(d);
  return horseshoe_gibbs_run(rng, stats, horseshoe_gibbs_init(stats), run, options);
}

// Spike-and-slab --------------------------------------------------------------

namespace {

void validate(const SpikeSlabOptions& o, const SufficientStats& stats) {
  if (!(o.theta > 0.0 && o.theta < 1.0)) throw ValidationError("theta must lie strictly inside (0, 1)");
  if (!(o.sigma2_slab > 0.0)) throw ValidationError("slab variance must be positive");
  if (o.fixed_sigma2_e && !(*o.fixed_sigma2_e > 0.0)) throw ValidationError("noise variance must be positive");
  if (!o.fixed_sigma2_e && stats.n < 1) throw ValidationError("noise variance update needs observations");
}

double logistic(double z) {
  if (z >= 0.0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace

ChainState spike_slab_gibbs_init(const SufficientStats& stats, const SpikeSlabOptions& options) {
  ChainState s;
  s.alpha_coef = ridge_start(stats);
  s.gamma = Eigen::VectorXi::Ones(stats.p());
  s.beta = s.alpha_coef;
  s.sigma2 = options.fixed_sigma2_e ? *options.fixed_sigma2_e : initial_sigma2(stats, s.beta);
  return s;
}

ChainState spike_slab_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                                 const SpikeSlabOptions& options) {
  require_dims(state, stats);
  validate(options, stats);
  const Index p = stats.p();
  ChainState next = state;
  if (options.fixed_sigma2_e) next.sigma2 = *options.fixed_sigma2_e;
  const double sigma2_e = next.sigma2;
  const double prior_log_odds = std::log(options.theta / (1.0 - options.theta));

  VectorXd fitted = stats.xtx * next.beta;  // X^T X beta, kept current
  for (Index i = 0; i < p; ++i) {
    const double xx = stats.xtx(i, i);
    const double partial = stats.xty(i) - fitted(i) + xx * next.beta(i);  // x_i^T (y - X_{-i} beta_{-i})
    const double precision = xx / sigma2_e + 1.0 / options.sigma2_slab;
    const double mean = partial / sigma2_e / precision;

    if (!options.freeze_gamma) {
      const double log_bayes_factor =
          -0.5 * std::log(options.sigma2_slab * precision) + 0.5 * mean * mean * precision;
      next.gamma(i) = rng.bernoulli(logistic(prior_log_odds + log_bayes_factor)) ? 1 : 0;
    }
    const double old = next.beta(i);
    if (next.gamma(i) == 1) {
      next.alpha_coef(i) = mean + rng.normal() / std::sqrt(precision);
      next.beta(i) = next.alpha_coef(i);
    } else {
      next.alpha_coef(i) = 0.0;
      next.beta(i) = 0.0;
    }
    if (next.beta(i) != old) fitted += stats.xtx.col(i) * (next.beta(i) - old);
  }

  if (!options.fixed_sigma2_e) {
    next.sigma2 = sample_inverse_gamma(rng, 0.5 * static_cast<double>(stats.n),
                                       0.5 * stats.residual_ss(next.beta) + 1e-300);
  }
  return next;
}

PosteriorSamples spike_slab_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                      const RunLength& run, const SpikeSlabOptions& options) {
  require_dims(initial, stats);
  validate(options, stats);
  const PriorSpec prior = PriorSpec::spike_slab(options.theta, std::sqrt(options.sigma2_slab));
  return run_chain(SamplerKind::SpikeSlab, prior, rng, std::move(initial), run,
                   [&](RngStream& r, const ChainState& s) { return spike_slab_gibbs_step(r, s, stats, options); });
}

PosteriorSamples spike_slab_gibbs_run(RngStream rng, const Dataset& d, double theta, double sigma2_slab,
                                      const RunLength& run, SpikeSlabOptions options) {
  options.theta = theta;
  options.sigma2_slab = sigma2_slab;
  const SufficientStats stats = SufficientStats::from(d);
  validate(options, stats);
  return spike_slab_gibbs_run(rng, stats, spike_slab_gibbs_init(stats, options), run, options);
}

VectorXd inclusion_probabilities(const PosteriorSamples& samples) {
  const Index p = samples.p();
  VectorXd out = VectorXd::Zero(p);
  if (samples.states.empty()) return out;
  for (const ChainState& s : samples.states) {
    if (s.gamma.size() != p) throw ValidationError("samples carry no inclusion indicators");
    out += s.gamma.cast<double>();
  }
  return out / static_cast<double>(samples.states.size());
}

}  // namespace bayesreg
