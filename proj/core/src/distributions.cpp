#include "bayesreg/distributions.hpp"

#include "bayesreg/error.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace bayesreg {

double sample_inverse_gaussian(RngStream& rng, double mu, double lam) {
  if (!(mu > 0.0) || !(lam > 0.0)) throw ValidationError("inverse Gaussian needs mu > 0 and lam > 0");
  const double nu = rng.normal();
  const double y = nu * nu;
  // smaller root of the quadratic, written as mu / (1 + a + sqrt(a^2 + 2a))
  // with a = mu y / (2 lam); algebraically equal to the textbook form but free
  // of cancellation when mu y / lam is large
  const double a = mu * y / (2.0 * lam);
  double x = mu / (1.0 + a + std::sqrt(a * (a + 2.0)));
  if (!(x > 0.0)) x = std::numeric_limits<double>::min();
  const double u = rng.uniform();
  if (u <= mu / (mu + x)) return x;
  const double other = mu * (mu / x);
  return std::isfinite(other) ? other : std::numeric_limits<double>::max();
}

double sample_inverse_gamma(RngStream& rng, double shape, double rate) {
  if (!(shape > 0.0) || !(rate > 0.0)) throw ValidationError("inverse gamma needs shape > 0 and rate > 0");
  double g = rng.gamma(shape, 1.0);
  if (!(g > 0.0)) g = std::numeric_limits<double>::min();
  const double x = rate / g;
  return std::isfinite(x) ? x : std::numeric_limits<double>::max();
}

double inverse_gaussian_pdf(double x, double mu, double lam) {
  if (!(x > 0.0)) return 0.0;
  const double d = x - mu;
  return std::sqrt(lam / (2.0 * std::numbers::pi * x * x * x)) *
         std::exp(-lam * d * d / (2.0 * mu * mu * x));
}

double inverse_gamma_pdf(double x, double shape, double rate) {
  if (!(x > 0.0)) return 0.0;
  return std::exp(shape * std::log(rate) - std::lgamma(shape) - (shape + 1.0) * std::log(x) - rate / x);
}

}  // namespace bayesreg
