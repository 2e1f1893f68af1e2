#pragma once

#include "bayesreg/model_core.hpp"
#include "bayesreg/priors.hpp"
#include "bayesreg/rng.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <vector>

namespace bayesreg {

enum class SamplerKind { Lasso, Horseshoe, SpikeSlab };

std::string_view to_string(SamplerKind kind);

/// Full parameter state after one Gibbs sweep. Which scale fields are in use
/// depends on the sampler; unused vectors stay empty.
struct ChainState {
  VectorXd beta;
  double sigma2 = 1.0;  ///< noise variance

  // Bayesian lasso
  VectorXd tau2;               ///< local variances tau_j^2
  double lambda_shrink = 1.0;  ///< Laplace rate lambda

  // horseshoe
  VectorXd lambda2;          ///< local variances lambda_i^2
  double tau2_global = 1.0;  ///< global variance tau^2
  VectorXd nu;               ///< auxiliary inverse-gamma variables for lambda_i^2
  double xi = 1.0;           ///< auxiliary inverse-gamma variable for tau^2

  // spike-and-slab
  Eigen::VectorXi gamma;
  VectorXd alpha_coef;
};

struct RunLength {
  std::size_t iters = 10000;
  std::size_t burn_in = 2000;
  std::size_t thin = 1;

  /// Number of retained states, floor((iters - burn_in) / thin).
  std::size_t retained() const;
  /// Throws ValidationError unless iters > burn_in and thin >= 1.
  void validate() const;
};

struct PosteriorSamples {
  SamplerKind sampler;
  PriorSpec prior;
  std::vector<ChainState> states;
  RunLength run;
  std::uint64_t seed = 0;
  std::uint64_t stream_id = 0;
  double elapsed_seconds = 0.0;

  Index p() const { return states.empty() ? 0 : states.front().beta.size(); }
  /// Retained beta draws, one row per state.
  MatrixXd beta_draws() const;
  VectorXd sigma2_draws() const;
};

/// Concatenates chains in order. Metadata is taken from the first chain.
PosteriorSamples concatenate(const std::vector<PosteriorSamples>& chains);

// Bayesian lasso --------------------------------------------------------

/// How the Laplace rate lambda evolves: held at a value, or refreshed every
/// sweep from lambda^2 | tau ~ Gamma(p + a, sum(tau_j^2) / 2 + b).
struct LambdaMode {
  bool fixed = false;
  double value = 1.0;
  double a = 1.0;
  double b = 1.0;

  static LambdaMode fixed_at(double lambda) { return {true, lambda, 1.0, 1.0}; }
  static LambdaMode hyper(double a = 1.0, double b = 1.0) { return {false, 1.0, a, b}; }
};

struct LassoOptions {
  LambdaMode lambda_mode = LambdaMode::hyper();
  bool freeze_sigma2 = false;
  bool freeze_scales = false;  ///< hold tau_j^2 (and lambda) at their current values
};

/// Empirical initialization: beta = (X^T X + I)^{-1} X^T y, sigma2 = r^T r / n,
/// tau_j^2 = beta_j^2, lambda = p sqrt(sigma2) / sum |beta_j|. A coefficient
/// that is exactly zero is moved to 1e-8 first.
ChainState lasso_gibbs_init(const SufficientStats& stats);
inline ChainState lasso_gibbs_init(const Dataset& d) { return lasso_gibbs_init(SufficientStats::from(d)); }

/// One sweep in the order beta, sigma2, {tau_j^2}, lambda:
///   beta | . ~ N(A^{-1} X^T y, sigma2 A^{-1}),  A = X^T X + D_tau^{-1}
///   sigma2 | . ~ InvGamma((n - 1)/2 + p/2, ||y - X beta||^2 / 2 + beta^T D_tau^{-1} beta / 2)
///   1/tau_j^2 | . ~ InvGaussian(sqrt(lambda^2 sigma2 / beta_j^2), lambda^2)
ChainState lasso_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                            const LassoOptions& options = {});

PosteriorSamples lasso_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                 const RunLength& run, const LassoOptions& options = {});
PosteriorSamples lasso_gibbs_run(RngStream rng, const Dataset& d, const RunLength& run,
                                 const LassoOptions& options = {});

// Horseshoe ---------------------------------------------------------------

struct HorseshoeOptions {
  bool freeze_sigma2 = false;
  bool freeze_scales = false;  ///< hold lambda_i^2, nu_i, tau^2, xi fixed
};

/// Starts from the ridge solution with all scales and auxiliaries at 1.
ChainState horseshoe_gibbs_init(const SufficientStats& stats);

/// One sweep in the order beta, {lambda_i^2}, {nu_i}, tau^2, xi, sigma2 using
/// the inverse-gamma decomposition of the half-Cauchy:
///   beta | . ~ N(A^{-1} X^T y, sigma2 A^{-1}),  A = X^T X + (tau^2 Lambda)^{-1}
///   lambda_i^2 | . ~ InvGamma(1, 1/nu_i + beta_i^2 / (2 tau^2 sigma2))
///   nu_i | . ~ InvGamma(1, 1 + 1/lambda_i^2)
///   tau^2 | . ~ InvGamma((p + 1)/2, 1/xi + sum beta_i^2 / (2 lambda_i^2 sigma2))
///   xi | . ~ InvGamma(1, 1 + 1/tau^2)
///   sigma2 | . ~ InvGamma((n + p)/2, ||y - X beta||^2 / 2 + beta^T (tau^2 Lambda)^{-1} beta / 2)
ChainState horseshoe_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                                const HorseshoeOptions& options = {});

PosteriorSamples horseshoe_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                     const RunLength& run, const HorseshoeOptions& options = {});
PosteriorSamples horseshoe_gibbs_run(RngStream rng, const Dataset& d, const RunLength& run,
                                     const HorseshoeOptions& options = {});

// Spike-and-slab ----------------------------------------------------------

struct SpikeSlabOptions {
  double theta = 0.5;        ///< prior inclusion probability
  double sigma2_slab = 1.0;  ///< slab variance of alpha_i
  std::optional<double> fixed_sigma2_e;  ///< hold the noise variance at this value
  bool freeze_gamma = false;
};

/// All coefficients included, alpha at the ridge solution.
ChainState spike_slab_gibbs_init(const SufficientStats& stats, const SpikeSlabOptions& options = {});

/// Coordinate sweep over i = 1..p drawing gamma_i with alpha_i integrated out
/// of its odds, then alpha_i from its normal conditional when gamma_i = 1
/// (alpha_i = 0 otherwise), followed by sigma2_e ~ InvGamma(n/2, rss/2).
ChainState spike_slab_gibbs_step(RngStream& rng, const ChainState& state, const SufficientStats& stats,
                                 const SpikeSlabOptions& options = {});

PosteriorSamples spike_slab_gibbs_run(RngStream rng, const SufficientStats& stats, ChainState initial,
                                      const RunLength& run, const SpikeSlabOptions& options = {});
PosteriorSamples spike_slab_gibbs_run(RngStream rng, const Dataset& d, double theta, double sigma2_slab,
                                      const RunLength& run, SpikeSlabOptions options = {});

/// Fraction of retained states with gamma_i = 1, per coefficient.
VectorXd inclusion_probabilities(const PosteriorSamples& samples);

// Shared machinery ---------------------------------------------------------

/// Draws from N(A^{-1} b, scale2 * A^{-1}) through a Cholesky factor of the
/// symmetric positive definite A, adding diagonal jitter from 1e-10 up to
/// 1e-6 (relative to the largest diagonal entry) when the factorization
/// fails. Throws NumericalBreakdown when every attempt fails.
VectorXd draw_gaussian_precision(RngStream& rng, const MatrixXd& a, const VectorXd& b, double scale2);

/// Lower clamp applied to |beta_j| before dividing by it.
inline constexpr double kCoefficientFloor = 1e-12;

}  // namespace bayesreg
