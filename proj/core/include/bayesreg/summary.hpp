#pragma once

#include "bayesreg/samplers.hpp"

#include <optional>
#include <span>
#include <vector>

namespace bayesreg {

struct DrawSummary {
  double mean = 0.0;
  double median = 0.0;
  double mode = 0.0;   ///< argmax of a Gaussian kernel density estimate
  double lower = 0.0;  ///< 2.5% quantile
  double upper = 0.0;  ///< 97.5% quantile
  double ess = 0.0;
};

struct SummaryReport {
  std::vector<DrawSummary> coefficients;
  DrawSummary sigma2;
  std::optional<std::vector<double>> inclusion;  ///< spike-and-slab only
  std::size_t retained = 0;
};

inline constexpr std::size_t kMinSummaryDraws = 100;

/// Summary of one scalar series. Throws InsufficientSamples below 100 draws.
DrawSummary summarize_draws(std::span<const double> draws);

/// Per-coefficient summaries on the standardized scale.
SummaryReport summarize(const PosteriorSamples& samples);
/// Same, with each beta draw mapped to the original scale of `d` first.
SummaryReport summarize(const PosteriorSamples& samples, const Dataset& d);

/// Linear-interpolation quantile (R type 7) of an ascending-sorted series.
double sorted_quantile(std::span<const double> sorted, double q);

/// Effective sample size from autocorrelations truncated by Geyer's initial
/// positive sequence, clamped to (0, n]. A constant series reports n.
double effective_sample_size(std::span<const double> draws);

/// Mode of a Gaussian kernel density estimate with Silverman's bandwidth,
/// maximized over a 512-point grid spanning the sample range.
double kde_mode(std::span<const double> draws);

}  // namespace bayesreg
