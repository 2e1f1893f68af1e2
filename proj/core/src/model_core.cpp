#include "bayesreg/model_core.hpp"

#include "bayesreg/error.hpp"

#include <cmath>
#include <sstream>

namespace bayesreg {

namespace {

void require_same_rows(const MatrixXd& x, const VectorXd& y) {
  if (x.rows() != y.size()) {
    std::ostringstream os;
    os << "design has " << x.rows() << " rows but response has " << y.size() << " entries";
    throw DimensionMismatch(os.str());
  }
}

struct Spectrum {
  double lambda_min;
  double lambda_max;
};

Spectrum gram_spectrum(const MatrixXd& x) {
  const MatrixXd gram = x.transpose() * x;
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram, Eigen::EigenvaluesOnly);
  const VectorXd& ev = eig.eigenvalues();
  return {ev.minCoeff(), ev.maxCoeff()};
}

void check_well_posed(const MatrixXd& x) {
  const Spectrum s = gram_spectrum(x);
  const double ratio = s.lambda_max > 0.0 ? s.lambda_min / s.lambda_max : 0.0;
  if (!(ratio > kSingularRatio)) throw SingularDesign(ratio);
}

// Least squares through a column-pivoted QR of the (possibly augmented) design,
// avoiding the squared conditioning of the normal equations.
VectorXd solve_least_squares(const MatrixXd& x, const VectorXd& y, double lambda) {
  if (lambda == 0.0) return x.colPivHouseholderQr().solve(y);
  const Index n = x.rows();
  const Index p = x.cols();
  MatrixXd aug(n + p, p);
  aug.topRows(n) = x;
  aug.bottomRows(p) = std::sqrt(lambda) * MatrixXd::Identity(p, p);
  VectorXd rhs = VectorXd::Zero(n + p);
  rhs.head(n) = y;
  return aug.colPivHouseholderQr().solve(rhs);
}

LinearFit fit_bare(const MatrixXd& x, const VectorXd& y, double lambda, FitMethod method) {
  LinearFit fit;
  fit.beta = solve_least_squares(x, y, lambda);
  fit.beta_raw = fit.beta;
  fit.intercept = 0.0;
  fit.residual_variance = (y - x * fit.beta).squaredNorm() / static_cast<double>(x.rows());
  fit.lambda = lambda;
  fit.method = method;
  return fit;
}

LinearFit fit_dataset(const Dataset& d, double lambda, FitMethod method) {
  LinearFit fit = fit_bare(d.x_std(), d.y_centered(), lambda, method);
  fit.beta_raw = d.to_original_scale(fit.beta, fit.intercept);
  return fit;
}

}  // namespace

VectorXd Dataset::to_original_scale(const VectorXd& beta_std, double& intercept) const {
  VectorXd slopes = beta_std.cwiseQuotient(col_sds_);
  intercept = y_mean_ - col_means_.dot(slopes);
  return slopes;
}

Dataset standardize(MatrixXd x_raw, VectorXd y_raw) {
  require_same_rows(x_raw, y_raw);
  if (x_raw.rows() < 2) throw DimensionMismatch("need at least two observations");
  if (x_raw.cols() < 1) throw DimensionMismatch("need at least one column");

  const auto n = static_cast<double>(x_raw.rows());
  Dataset d;
  d.col_means_ = x_raw.colwise().mean().transpose();
  d.x_std_ = x_raw.rowwise() - d.col_means_.transpose();
  d.col_sds_.resize(x_raw.cols());
  for (Index j = 0; j < x_raw.cols(); ++j) {
    const double sd = std::sqrt(d.x_std_.col(j).squaredNorm() / n);
    if (!(sd > 0.0)) throw ConstantColumn(static_cast<std::size_t>(j));
    d.col_sds_(j) = sd;
    d.x_std_.col(j) /= sd;
    // second pass removes the rounding residue left in the mean
    d.x_std_.col(j).array() -= d.x_std_.col(j).mean();
  }
  d.y_mean_ = y_raw.mean();
  d.y_centered_ = y_raw.array() - d.y_mean_;
  d.x_raw_ = std::move(x_raw);
  d.y_raw_ = std::move(y_raw);
  return d;
}

double SufficientStats::residual_ss(const VectorXd& beta) const {
  const double rss = yty - 2.0 * beta.dot(xty) + beta.dot(xtx * beta);
  return rss > 0.0 ? rss : 0.0;
}

SufficientStats SufficientStats::from(const Dataset& d) { return from(d.x_std(), d.y_centered()); }

SufficientStats SufficientStats::from(const MatrixXd& x, const VectorXd& y) {
  require_same_rows(x, y);
  SufficientStats s;
  s.xtx = x.transpose() * x;
  s.xty = x.transpose() * y;
  s.yty = y.squaredNorm();
  s.n = x.rows();
  return s;
}

SufficientStats SufficientStats::empty(Index p) {
  return {MatrixXd::Zero(p, p), VectorXd::Zero(p), 0.0, 0};
}

std::string_view to_string(FitMethod m) {
  switch (m) {
    case FitMethod::Ols:
      return "ols";
    case FitMethod::Ridge:
      return "ridge";
  }
  return "unknown";
}

VectorXd LinearFit::predict(const MatrixXd& x_raw) const {
  return (x_raw * beta_raw).array() + intercept;
}

LinearFit ols_fit(const Dataset& d) {
  check_well_posed(d.x_std());
  return fit_dataset(d, 0.0, FitMethod::Ols);
}

LinearFit ols_fit(const MatrixXd& x, const VectorXd& y) {
  require_same_rows(x, y);
  check_well_posed(x);
  return fit_bare(x, y, 0.0, FitMethod::Ols);
}

LinearFit ridge_fit(const Dataset& d, double lambda) {
  if (!(lambda >= 0.0)) throw NegativePenalty(lambda);
  if (lambda == 0.0) check_well_posed(d.x_std());
  return fit_dataset(d, lambda, FitMethod::Ridge);
}

LinearFit ridge_fit(const MatrixXd& x, const VectorXd& y, double lambda) {
  require_same_rows(x, y);
  if (!(lambda >= 0.0)) throw NegativePenalty(lambda);
  if (lambda == 0.0) check_well_posed(x);
  return fit_bare(x, y, lambda, FitMethod::Ridge);
}

ConditioningReport condition_number(const MatrixXd& x, double alpha) {
  if (x.size() == 0) throw DimensionMismatch("condition number of an empty matrix");
  if (!(alpha >= 0.0)) throw NegativePenalty(alpha);
  const Spectrum s = gram_spectrum(x);
  constexpr double inf = std::numeric_limits<double>::infinity();
  // eigenvalues below the solver's resolution are treated as exact zeros
  const double floor = s.lambda_max * static_cast<double>(x.cols()) *
                       std::numeric_limits<double>::epsilon();
  const double lmin = s.lambda_min > floor ? s.lambda_min : 0.0;

  ConditioningReport r;
  r.alpha = alpha;
  r.lambda_min = s.lambda_min;
  r.lambda_max = s.lambda_max;
  r.kappa = lmin > 0.0 ? s.lambda_max / lmin : inf;
  r.kappa_shifted = (lmin + alpha) > 0.0 ? (s.lambda_max + alpha) / (lmin + alpha) : inf;
  return r;
}

double sensitivity_bound(const MatrixXd& x, const VectorXd& y, const VectorXd& delta_y) {
  require_same_rows(x, y);
  require_same_rows(x, delta_y);
  const VectorXd g = x.transpose() * y;
  const double g_norm = g.norm();
  if (g_norm == 0.0) throw ZeroGradient();
  const double dg_norm = (x.transpose() * delta_y).norm();
  if (dg_norm == 0.0) return 0.0;

  const MatrixXd gram = x.transpose() * x;
  Eigen::SelfAdjointEigenSolver<MatrixXd> eig(gram);
  const VectorXd& ev = eig.eigenvalues();
  const double floor = ev.maxCoeff() * static_cast<double>(x.cols()) *
                       std::numeric_limits<double>::epsilon();
  VectorXd projected = VectorXd::Zero(g.size());
  for (Index k = 0; k < ev.size(); ++k) {
    if (ev(k) > floor) {
      const auto v = eig.eigenvectors().col(k);
      projected += v.dot(g) * v;
    }
  }
  const double cos_theta = projected.norm() / g_norm;
  const double kappa = condition_number(x, 0.0).kappa;
  if (cos_theta == 0.0) return std::numeric_limits<double>::infinity();
  return kappa / cos_theta * dg_norm / g_norm;
}

MatrixXd correlated_design(double eps) {
  MatrixXd x(2, 2);
  x << 1.0, 1.0, 1.0, 1.0 + eps;
  return x;
}

double correlated_design_kappa(double eps) {
  // (a + r) / (a - r) with a = eps^2 + 2 eps + 4, r = (eps + 2) sqrt(eps^2 + 4).
  // a^2 - r^2 = 4 eps^2, so the denominator is rewritten as 4 eps^2 / (a + r)
  // to avoid cancellation for small eps.
  if (eps == 0.0) return std::numeric_limits<double>::infinity();
  const double a = eps * eps + 2.0 * eps + 4.0;
  const double r = (eps + 2.0) * std::sqrt(eps * eps + 4.0);
  const double sum = a + r;
  return sum * sum / (4.0 * eps * eps);
}

std::vector<ConditionScanRow> condition_scan(std::span<const double> eps_grid, double alpha) {
  std::vector<ConditionScanRow> rows;
  rows.reserve(eps_grid.size());
  for (const double eps : eps_grid) {
    if (!(eps > 0.0)) throw ValidationError("condition scan requires eps > 0");
    const ConditioningReport r = condition_number(correlated_design(eps), alpha);
    rows.push_back({eps, r.kappa, r.kappa_shifted, correlated_design_kappa(eps)});
  }
  return rows;
}

std::vector<double> log_space(double lo, double hi, std::size_t count) {
  if (!(lo > 0.0 && hi > 0.0)) throw ValidationError("log_space bounds must be positive");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = lo;
    return out;
  }
  const double a = std::log10(lo);
  const double b = std::log10(hi);
  for (std::size_t k = 0; k < count; ++k) {
    out[k] = std::pow(10.0, a + (b - a) * static_cast<double>(k) / static_cast<double>(count - 1));
  }
  out.front() = lo;
  out.back() = hi;
  return out;
}

}  // namespace bayesreg
