#pragma once

#include "bayesreg/model_core.hpp"

#include <string_view>
#include <utility>
#include <vector>

namespace bayesreg {

enum class PriorKind { Ridge, Lasso, Cauchy, Horseshoe, SpikeSlab };

std::string_view to_string(PriorKind kind);

/// Coefficient prior with its hyperparameters. Ridge, Lasso, Cauchy and
/// Horseshoe carry a positive scale `tau`; SpikeSlab carries the inclusion
/// probability `theta` in (0, 1) and the slab standard deviation
/// `sigma_beta`. The slab variance sigma_beta^2 is the single slab
/// hyperparameter everywhere in the library.
class PriorSpec {
 public:
  static PriorSpec ridge(double tau);
  static PriorSpec lasso(double tau);
  static PriorSpec cauchy(double tau);
  static PriorSpec horseshoe(double tau);
  static PriorSpec spike_slab(double theta, double sigma_beta);

  PriorKind kind() const noexcept { return kind_; }
  double tau() const noexcept { return tau_; }
  double theta() const noexcept { return theta_; }
  double sigma_beta() const noexcept { return sigma_beta_; }

 private:
  PriorSpec(PriorKind kind, double tau, double theta, double sigma_beta)
      : kind_(kind), tau_(tau), theta_(theta), sigma_beta_(sigma_beta) {}

  PriorKind kind_;
  double tau_;
  double theta_;
  double sigma_beta_;
};

/// Log prior density of a single coefficient.
///
/// Exact for Ridge (normal, sd tau), Lasso (Laplace, scale tau) and Cauchy.
/// Horseshoe returns log log(1 + 2 tau^2 / beta^2), the log of the bound
/// surrogate, and +inf at beta = 0. SpikeSlab returns log(1 - theta) at the
/// atom beta = 0 and log(theta) + log N(beta; 0, sigma_beta^2) elsewhere.
double log_prior(const PriorSpec& prior, double beta);

/// Penalty phi_tau(beta), the negative log prior up to a beta-free constant:
///   ridge beta^2 / (2 tau^2), lasso |beta| / tau, Cauchy log(tau^2 + beta^2),
///   horseshoe -log log(1 + 2 tau^2 / beta^2),
///   spike-and-slab beta^2 / (2 sigma_beta^2) + log((1 - theta) / theta) for
///   beta != 0 and 0 at beta = 0.
/// Throws UndefinedAtZero for the horseshoe at beta = 0.
double penalty(const PriorSpec& prior, double beta);

/// Horseshoe penalty bound -log log(1 + 2 tau^2 / beta^2). Increasing in
/// |beta|; diverges to -inf at the origin. Throws UndefinedAtZero.
double horseshoe_penalty(double tau, double beta);

/// Horseshoe marginal density
///   p(beta | tau) = int_0^inf N(beta; 0, tau^2 l^2) (2/pi) / (1 + l^2) dl
/// by adaptive quadrature at relative tolerance `tol`. Returns +inf at 0.
double horseshoe_density_quadrature(double tau, double beta, double tol = 1e-8);

struct MixtureCheck {
  double mixture_value;
  double closed_form;
};

/// Normal scale mixture with exponential mixing, integrated numerically,
///   int_0^inf N(beta; 0, sigma^2 t) (alpha^2/2) exp(-alpha^2 t / 2) dt,
/// next to the Laplace closed form (alpha / (2 sigma)) exp(-alpha |beta| / sigma).
MixtureCheck laplace_mixture_check(double alpha, double sigma, double beta, double tol = 1e-10);

/// Penalty weight lambda = 2 sigma^2 / b of the lasso objective that shares
/// its minimizer with the posterior mode under a Laplace prior of scale b.
double lasso_weight_from_scale(double sigma2, double b);
/// Inverse of `lasso_weight_from_scale`.
double laplace_scale_from_weight(double sigma2, double lambda);
/// Laplace rate alpha / sigma produced by the exponential scale mixture.
double laplace_rate_from_mixture(double alpha, double sigma);

/// Negative log posterior of the Bernoulli-Gaussian reparametrization
///   ||y - X_g a_g||^2 / (2 sigma2_e) + ||a||^2 / (2 sigma2)
///     + log((1 - theta) / theta) * sum(g)
/// evaluated on the standardized data. `gamma` entries must be 0 or 1.
double spike_slab_neg_log_posterior(const Eigen::VectorXi& gamma, const VectorXd& alpha_coef,
                                    double theta, double sigma2, double sigma2_e, const Dataset& d);

struct GridSpec {
  double lo = -2.0;
  double hi = 2.0;
  std::size_t points = 101;
};

/// phi(beta1) + phi(beta2) sampled on a square grid, plus one level set
/// {phi(beta1) + phi(beta2) = budget} traced by radial bisection.
struct PenaltyGrid {
  std::vector<double> beta_grid;  ///< shared axis for beta1 and beta2
  std::vector<double> values;     ///< row-major, beta1 outer, beta2 inner
  PriorSpec prior;
  double budget;
  std::vector<std::pair<double, double>> level_set;

  double at(std::size_t i, std::size_t j) const { return values[i * beta_grid.size() + j]; }
};

/// Default budget: the level set passes through (1/sqrt 2, 1/sqrt 2).
double default_budget(const PriorSpec& prior);

/// Horseshoe cells on an axis hold the -inf sentinel.
PenaltyGrid penalty_contours(const PriorSpec& prior, const GridSpec& grid, double budget,
                             std::size_t level_set_points = 360);
inline PenaltyGrid penalty_contours(const PriorSpec& prior, const GridSpec& grid) {
  return penalty_contours(prior, grid, default_budget(prior));
}

}  // namespace bayesreg
