#pragma once

#include <Eigen/Dense>

#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace bayesreg {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

/// Design matrix and response together with their standardized forms.
///
/// Columns of `x_std()` have mean 0 and population standard deviation 1
/// (divisor n); `y_centered()` has mean 0. The raw data and the centering
/// statistics are kept so fits can be mapped back to the original scale.
/// Instances are immutable once built by `standardize`.
class Dataset {
 public:
  const MatrixXd& x_raw() const noexcept { return x_raw_; }
  const VectorXd& y_raw() const noexcept { return y_raw_; }
  const MatrixXd& x_std() const noexcept { return x_std_; }
  const VectorXd& y_centered() const noexcept { return y_centered_; }
  const VectorXd& col_means() const noexcept { return col_means_; }
  const VectorXd& col_sds() const noexcept { return col_sds_; }
  double y_mean() const noexcept { return y_mean_; }
  Index n() const noexcept { return x_raw_.rows(); }
  Index p() const noexcept { return x_raw_.cols(); }

  /// Maps standardized-scale coefficients to the original scale. Returns the
  /// slopes; the intercept is written to `intercept`.
  VectorXd to_original_scale(const VectorXd& beta_std, double& intercept) const;

 private:
  friend Dataset standardize(MatrixXd x_raw, VectorXd y_raw);
  Dataset() = default;

  MatrixXd x_raw_;
  VectorXd y_raw_;
  MatrixXd x_std_;
  VectorXd y_centered_;
  VectorXd col_means_;
  VectorXd col_sds_;
  double y_mean_ = 0.0;
};

/// Throws ConstantColumn or DimensionMismatch; requires n >= 2 and p >= 1.
Dataset standardize(MatrixXd x_raw, VectorXd y_raw);

/// Gram statistics of a regression problem. Every sampler works from these,
/// which also admits the data-free case (n = 0, all statistics zero).
struct SufficientStats {
  MatrixXd xtx;
  VectorXd xty;
  double yty = 0.0;
  Index n = 0;

  Index p() const noexcept { return xtx.rows(); }
  /// ||y - X beta||^2 expanded through the Gram statistics, floored at 0.
  double residual_ss(const VectorXd& beta) const;

  static SufficientStats from(const Dataset& d);
  static SufficientStats from(const MatrixXd& x, const VectorXd& y);
  static SufficientStats empty(Index p);
};

enum class FitMethod { Ols, Ridge };

std::string_view to_string(FitMethod m);

struct LinearFit {
  VectorXd beta;      ///< coefficients on the scale the fit was computed on
  VectorXd beta_raw;  ///< slopes on the original scale
  double intercept = 0.0;
  double residual_variance = 0.0;  ///< r^T r / n
  double lambda = 0.0;
  FitMethod method = FitMethod::Ols;

  /// Predictions on the original scale of the data the fit came from.
  VectorXd predict(const MatrixXd& x_raw) const;
};

/// Ordinary least squares on the standardized data. Throws SingularDesign
/// when lambda_min / lambda_max of X^T X is at or below 1e-12.
LinearFit ols_fit(const Dataset& d);
/// Ordinary least squares on a bare design without intercept.
LinearFit ols_fit(const MatrixXd& x, const VectorXd& y);

/// Minimizer of ||y - X beta||^2 + lambda ||beta||^2. Throws NegativePenalty.
LinearFit ridge_fit(const Dataset& d, double lambda);
LinearFit ridge_fit(const MatrixXd& x, const VectorXd& y, double lambda);

inline constexpr double kSingularRatio = 1e-12;

struct ConditioningReport {
  double kappa = 1.0;          ///< lambda_max / lambda_min of X^T X, +inf when singular
  double kappa_shifted = 1.0;  ///< same for X^T X + alpha I
  double alpha = 0.0;
  double lambda_min = 0.0;
  double lambda_max = 0.0;
};

/// Eigenvalue-based conditioning of X^T X, with and without the shift alpha I.
ConditioningReport condition_number(const MatrixXd& x, double alpha);

/// Right-hand side of the relative-perturbation bound
///   ||d beta|| / ||beta|| <= kappa(X^T X) / cos(theta) * ||X^T dy|| / ||X^T y||
/// where `delta_y` perturbs the response and theta is the angle between X^T y
/// and the range of X^T X. Euclidean norms throughout. Throws ZeroGradient.
double sensitivity_bound(const MatrixXd& x, const VectorXd& y, const VectorXd& delta_y);

/// The 2x2 correlated design ((1, 1), (1, 1 + eps)).
MatrixXd correlated_design(double eps);

/// Closed-form kappa(X^T X) for `correlated_design(eps)`.
double correlated_design_kappa(double eps);

struct ConditionScanRow {
  double eps;
  double kappa;
  double kappa_shifted;
  double kappa_closed_form;
};

/// Conditioning of `correlated_design(eps)` for each eps > 0.
std::vector<ConditionScanRow> condition_scan(std::span<const double> eps_grid, double alpha);

/// `count` log-spaced values from `lo` to `hi` inclusive.
std::vector<double> log_space(double lo, double hi, std::size_t count);

}  // namespace bayesreg
