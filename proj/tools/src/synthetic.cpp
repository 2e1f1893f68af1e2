#include "bayesreg_cli/synthetic.hpp"

#include <bayesreg/error.hpp>

namespace bayesreg::cli {

SyntheticSpec SyntheticSpec::sparse_ten() {
  SyntheticSpec s;
  s.beta_true = Eigen::VectorXd::Zero(10);
  s.beta_true.head(3) << 2.0, 2.5, 3.0;
  s.n = 100;
  s.kappa = 1.0;
  return s;
}

SyntheticData generate_synthetic(RngStream& rng, const SyntheticSpec& spec) {
  if (spec.n < 2) throw ValidationError("synthetic data needs n >= 2");
  if (spec.beta_true.size() < 1) throw ValidationError("synthetic data needs at least one coefficient");
  if (!(spec.kappa >= 0.0)) throw ValidationError("noise multiplier kappa must be >= 0");

  const auto n = static_cast<Eigen::Index>(spec.n);
  const Eigen::Index p = spec.beta_true.size();
  Eigen::MatrixXd x(n, p);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < p; ++j) x(i, j) = 2.0 * rng.uniform() - 1.0;
  }
  const double sd = spec.noise_sd();
  Eigen::VectorXd y = x * spec.beta_true;
  if (sd > 0.0) {
    for (Eigen::Index i = 0; i < n; ++i) y(i) += sd * rng.normal();
  }
  return {standardize(std::move(x), std::move(y)), spec.beta_true, sd};
}

}  // namespace bayesreg::cli
