#pragma once

#include <bayesreg/model_core.hpp>
#include <bayesreg/rng.hpp>

namespace bayesreg::cli {

/// Synthetic regression: X entries i.i.d. Uniform[-1, 1] and
/// y = X beta + e with e_i ~ N(0, kappa^2 ||beta||^2).
struct SyntheticSpec {
  Eigen::VectorXd beta_true;
  std::size_t n = 100;
  double kappa = 1.0;

  /// beta = (2, 2.5, 3, 0, 0, 0, 0, 0, 0, 0), n = 100, kappa = 1.
  static SyntheticSpec sparse_ten();
  double noise_sd() const { return kappa * beta_true.norm(); }
};

struct SyntheticData {
  Dataset data;
  Eigen::VectorXd beta_true;
  double noise_sd;
};

/// Throws ValidationError for n < 2, an empty beta, or kappa < 0.
SyntheticData generate_synthetic(RngStream& rng, const SyntheticSpec& spec);

}  // namespace bayesreg::cli
