#pragma once

#include <cstddef>
#include <functional>
#include <span>

namespace bayesreg {

struct QuadratureOptions {
  double rel_tol = 1e-8;
  double abs_tol = 0.0;
  std::size_t max_intervals = 4000;
};

struct QuadratureResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t evaluations = 0;
};

/// Globally adaptive 15-point Gauss-Kronrod quadrature of f over [a, b].
///
/// `b` may be +infinity; the half-line is mapped onto [0, 1) by
/// x = a + t / (1 - t). `breakpoints` seed the initial partition and should
/// mark peaks or kinks of the integrand (points outside (a, b) are ignored).
/// Throws QuadratureFailure when max(abs_tol, rel_tol * |value|) is not met
/// within `max_intervals` subintervals.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           std::span<const double> breakpoints = {},
                           const QuadratureOptions& options = {});

}  // namespace bayesreg
