#pragma once

#include "bayesreg_cli/synthetic.hpp"

#include <bayesreg/samplers.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace bayesreg::cli {

/// Thresholds of the sparse-recovery comparison on the ten-coefficient
/// synthetic problem.
struct RecoveryCriteria {
  double zero_tolerance = 0.15;        ///< |horseshoe mode| bound on true zeros
  std::size_t min_zero_passes = 16;    ///< seeds that must meet zero_tolerance
  double nonzero_tolerance = 0.75;     ///< bound on |seed-averaged estimate - truth|
};

struct ReproductionOptions {
  std::vector<std::uint64_t> seeds;
  SyntheticSpec spec = SyntheticSpec::sparse_ten();
  RunLength run{10000, 2000, 1};
  double ridge_lambda = 1.0;
  RecoveryCriteria criteria;
  unsigned workers = 1;

  /// base, base + 1, ..., base + count - 1
  static std::vector<std::uint64_t> seed_range(std::uint64_t base, std::size_t count);
};

/// Point estimates of one seed on the original scale. Ridge and OLS are
/// closed-form; lasso and horseshoe are kernel-density posterior modes.
struct SeedResult {
  std::uint64_t seed = 0;
  Eigen::VectorXd truth;
  Eigen::VectorXd ols;
  Eigen::VectorXd ridge;
  Eigen::VectorXd lasso;
  Eigen::VectorXd horseshoe;
  double horseshoe_max_zero = 0.0;  ///< max |mode| over true zeros
  double horseshoe_median_zero = 0.0;
  double lasso_median_zero = 0.0;
  double ridge_median_zero = 0.0;

  bool zeros_within(double tol) const { return horseshoe_max_zero < tol; }
  bool beats_lasso() const { return horseshoe_median_zero < lasso_median_zero; }
  bool beats_ridge() const { return horseshoe_median_zero < ridge_median_zero; }
};

struct MethodRecovery {
  std::string method;
  Eigen::VectorXd mean_error;  ///< seed-averaged estimate minus truth, nonzero coefficients
  bool within = false;
};

struct ReproductionReport {
  std::vector<SeedResult> seeds;
  std::vector<MethodRecovery> recovery;
  std::size_t zero_passes = 0;
  bool zeros_ok = false;
  bool medians_ok = false;
  bool nonzero_ok = false;
  double elapsed_seconds = 0.0;

  bool passed() const { return zeros_ok && medians_ok && nonzero_ok; }
};

/// Fits OLS, ridge MAP, Bayesian lasso and horseshoe on freshly generated
/// data for every seed. Seed s draws its data from RngStream(s, 0), the lasso
/// chain from RngStream(s, 1) and the horseshoe chain from RngStream(s, 2).
ReproductionReport reproduce_paper(const ReproductionOptions& options);

}  // namespace bayesreg::cli
