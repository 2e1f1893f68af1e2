#include "bayesreg/priors.hpp"

#include "bayesreg/error.hpp"
#include "bayesreg/quadrature.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace bayesreg {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kPi = std::numbers::pi;

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    std::ostringstream os;
    os << name << " must be positive and finite, got " << v;
    throw ValidationError(os.str());
  }
}

double normal_pdf(double x, double sd) {
  const double z = x / sd;
  return std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * kPi));
}

// penalty() with the axis sentinel instead of an exception
double penalty_or_sentinel(const PriorSpec& prior, double beta) {
  if (prior.kind() == PriorKind::Horseshoe && beta == 0.0) return -kInf;
  return penalty(prior, beta);
}

}  // namespace

std::string_view to_string(PriorKind kind) {
  switch (kind) {
    case PriorKind::Ridge:
      return "ridge";
    case PriorKind::Lasso:
      return "lasso";
    case PriorKind::Cauchy:
      return "cauchy";
    case PriorKind::Horseshoe:
      return "horseshoe";
    case PriorKind::SpikeSlab:
      return "spike-slab";
  }
  return "unknown";
}

PriorSpec PriorSpec::ridge(double tau) {
  require_positive(tau, "tau");
  return {PriorKind::Ridge, tau, 0.0, 0.0};
}

PriorSpec PriorSpec::lasso(double tau) {
  require_positive(tau, "tau");
  return {PriorKind::Lasso, tau, 0.0, 0.0};
}

PriorSpec PriorSpec::cauchy(double tau) {
  require_positive(tau, "tau");
  return {PriorKind::Cauchy, tau, 0.0, 0.0};
}

PriorSpec PriorSpec::horseshoe(double tau) {
  require_positive(tau, "tau");
  return {PriorKind::Horseshoe, tau, 0.0, 0.0};
}

PriorSpec PriorSpec::spike_slab(double theta, double sigma_beta) {
  if (!(theta > 0.0 && theta < 1.0)) {
    std::ostringstream os;
    os << "theta must lie strictly inside (0, 1), got " << theta;
    throw ValidationError(os.str());
  }
  require_positive(sigma_beta, "sigma_beta");
  return {PriorKind::SpikeSlab, 0.0, theta, sigma_beta};
}

double log_prior(const PriorSpec& prior, double beta) {
  const double tau = prior.tau();
  switch (prior.kind()) {
    case PriorKind::Ridge:
      return -0.5 * beta * beta / (tau * tau) - std::log(tau * std::sqrt(2.0 * kPi));
    case PriorKind::Lasso:
      return -std::abs(beta) / tau - std::log(2.0 * tau);
    case PriorKind::Cauchy:
      return std::log(tau) - std::log(kPi * (tau * tau + beta * beta));
    case PriorKind::Horseshoe:
      if (beta == 0.0) return kInf;
      return -horseshoe_penalty(tau, beta);
    case PriorKind::SpikeSlab: {
      if (beta == 0.0) return std::log1p(-prior.theta());
      const double s = prior.sigma_beta();
      return std::log(prior.theta()) - 0.5 * beta * beta / (s * s) -
             std::log(s * std::sqrt(2.0 * kPi));
    }
  }
  return 0.0;
}

double penalty(const PriorSpec& prior, double beta) {
  const double tau = prior.tau();
  switch (prior.kind()) {
    case PriorKind::Ridge:
      return beta * beta / (2.0 * tau * tau);
    case PriorKind::Lasso:
      return std::abs(beta) / tau;
    case PriorKind::Cauchy:
      return std::log(tau * tau + beta * beta);
    case PriorKind::Horseshoe:
      return horseshoe_penalty(tau, beta);
    case PriorKind::SpikeSlab: {
      if (beta == 0.0) return 0.0;
      const double s = prior.sigma_beta();
      const double theta = prior.theta();
      return beta * beta / (2.0 * s * s) + std::log((1.0 - theta) / theta);
    }
  }
  return 0.0;
}

double horseshoe_penalty(double tau, double beta) {
  require_positive(tau, "tau");
  if (beta == 0.0) throw UndefinedAtZero();
  return -std::log(std::log1p(2.0 * tau * tau / (beta * beta)));
}

double horseshoe_density_quadrature(double tau, double beta, double tol) {
  require_positive(tau, "tau");
  require_positive(tol, "tol");
  if (beta == 0.0) return kInf;
  const double b = std::abs(beta);
  // the normal factor peaks in lambda at |beta| / tau; a large peak is
  // rescaled to 1 so the half-line map keeps its resolution there
  const double peak = b / tau;
  const double scale = std::max(1.0, peak);
  auto integrand = [tau, b, scale](double s) {
    if (s <= 0.0) return 0.0;
    const double lambda = scale * s;
    return scale * normal_pdf(b, tau * lambda) * (2.0 / kPi) / (1.0 + lambda * lambda);
  };
  const double cuts[] = {0.25 * peak / scale, peak / scale, 4.0 * peak / scale, 1.0 / scale};
  QuadratureOptions opts;
  opts.rel_tol = tol;
  return integrate(integrand, 0.0, kInf, cuts, opts).value;
}

MixtureCheck laplace_mixture_check(double alpha, double sigma, double beta, double tol) {
  require_positive(alpha, "alpha");
  require_positive(sigma, "sigma");
  require_positive(tol, "tol");
  const double closed = alpha / (2.0 * sigma) * std::exp(-alpha * std::abs(beta) / sigma);
  // substitute t = u^2 so the t^{-1/2} singularity of the normal factor at
  // beta = 0 cancels against dt = 2u du
  auto integrand = [alpha, sigma, beta](double u) {
    if (u <= 0.0) return beta == 0.0 ? alpha * alpha / (sigma * std::sqrt(2.0 * kPi)) : 0.0;
    const double t = u * u;
    const double mixing = 0.5 * alpha * alpha * std::exp(-0.5 * alpha * alpha * t);
    return normal_pdf(beta, sigma * u) * mixing * 2.0 * u;
  };
  const double peak = std::sqrt(std::abs(beta) / (alpha * sigma));
  const double cuts[] = {0.5 * peak, peak, 2.0 * peak, 1.0 / alpha};
  QuadratureOptions opts;
  opts.rel_tol = tol;
  opts.abs_tol = tol * 1e-3 * closed;
  const double mixture = integrate(integrand, 0.0, kInf, cuts, opts).value;
  return {mixture, closed};
}

double lasso_weight_from_scale(double sigma2, double b) {
  require_positive(sigma2, "sigma2");
  require_positive(b, "b");
  return 2.0 * sigma2 / b;
}

double laplace_scale_from_weight(double sigma2, double lambda) {
  require_positive(sigma2, "sigma2");
  require_positive(lambda, "lambda");
  return 2.0 * sigma2 / lambda;
}

double laplace_rate_from_mixture(double alpha, double sigma) {
  require_positive(alpha, "alpha");
  require_positive(sigma, "sigma");
  return alpha / sigma;
}

double spike_slab_neg_log_posterior(const Eigen::VectorXi& gamma, const VectorXd& alpha_coef,
                                    double theta, double sigma2, double sigma2_e, const Dataset& d) {
  if (gamma.size() != d.p() || alpha_coef.size() != d.p()) {
    throw DimensionMismatch("gamma and alpha must have one entry per column");
  }
  if (!(theta > 0.0 && theta < 1.0)) throw ValidationError("theta must lie strictly inside (0, 1)");
  require_positive(sigma2, "sigma2");
  require_positive(sigma2_e, "sigma2_e");
  VectorXd beta(d.p());
  for (Index j = 0; j < d.p(); ++j) {
    if (gamma(j) != 0 && gamma(j) != 1) throw ValidationError("gamma entries must be 0 or 1");
    beta(j) = gamma(j) == 1 ? alpha_coef(j) : 0.0;
  }
  const double fit = (d.y_centered() - d.x_std() * beta).squaredNorm() / (2.0 * sigma2_e);
  const double shrink = alpha_coef.squaredNorm() / (2.0 * sigma2);
  return fit + shrink + std::log((1.0 - theta) / theta) * static_cast<double>(gamma.sum());
}

double default_budget(const PriorSpec& prior) {
  return 2.0 * penalty(prior, std::numbers::sqrt2 / 2.0);
}

PenaltyGrid penalty_contours(const PriorSpec& prior, const GridSpec& grid, double budget,
                             std::size_t level_set_points) {
  if (!std::isfinite(grid.lo) || !std::isfinite(grid.hi) || !(grid.hi > grid.lo)) {
    throw ValidationError("contour grid bounds must be finite with lo < hi");
  }
  if (grid.points < 2) throw ValidationError("contour grid needs at least two points per axis");

  PenaltyGrid out{{}, {}, prior, budget, {}};
  const std::size_t m = grid.points;
  out.beta_grid.resize(m);
  for (std::size_t k = 0; k < m; ++k) {
    out.beta_grid[k] = grid.lo + (grid.hi - grid.lo) * static_cast<double>(k) / static_cast<double>(m - 1);
  }
  // exact zero on the axis when the grid straddles it
  for (double& b : out.beta_grid) {
    if (std::abs(b) < 1e-12 * (grid.hi - grid.lo)) b = 0.0;
  }
  std::vector<double> phi(m);
  for (std::size_t k = 0; k < m; ++k) phi[k] = penalty_or_sentinel(prior, out.beta_grid[k]);
  out.values.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) out.values[i * m + j] = phi[i] + phi[j];
  }

  // radial bisection along directions that avoid the axes
  auto radial = [&prior](double c, double s, double rho) {
    return penalty_or_sentinel(prior, rho * c) + penalty_or_sentinel(prior, rho * s);
  };
  for (std::size_t k = 0; k < level_set_points; ++k) {
    const double angle = 2.0 * std::numbers::pi * (static_cast<double>(k) + 0.5) /
                         static_cast<double>(level_set_points);
    const double c = std::cos(angle);
    const double s = std::sin(angle);
    double lo = 0.0;
    if (!(radial(c, s, 1e-300) < budget)) continue;
    double hi = 1.0;
    while (radial(c, s, hi) <= budget && hi < 1e12) hi *= 2.0;
    if (radial(c, s, hi) <= budget) continue;
    for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
      const double mid = 0.5 * (lo + hi);
      (radial(c, s, mid) < budget ? lo : hi) = mid;
    }
    const double rho = 0.5 * (lo + hi);
    out.level_set.emplace_back(rho * c, rho * s);
  }
  return out;
}

}  // namespace bayesreg
