#pragma once

#include "bayesreg/rng.hpp"

namespace bayesreg {

/// Draw from InverseGaussian(mean mu, shape lam) by the transformation with
/// rejection of Michael, Schucany and Haas. Always strictly positive.
double sample_inverse_gaussian(RngStream& rng, double mu, double lam);

/// Draw from InverseGamma(shape, rate): the reciprocal of Gamma(shape, rate).
double sample_inverse_gamma(RngStream& rng, double shape, double rate);

double inverse_gaussian_pdf(double x, double mu, double lam);
double inverse_gamma_pdf(double x, double shape, double rate);

}  // namespace bayesreg
