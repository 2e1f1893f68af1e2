#include "bayesreg/summary.hpp"

#include "bayesreg/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace bayesreg {

namespace {

constexpr std::size_t kModeGrid = 512;

double mean_of(std::span<const double> x) {
  return std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
}

}  // namespace

double sorted_quantile(std::span<const double> sorted, double q) {
  if (sorted.empty()) throw InsufficientSamples(0, 1);
  const double h = (static_cast<double>(sorted.size()) - 1.0) * q;
  const auto lo = static_cast<std::size_t>(std::floor(h));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[hi] - sorted[lo]);
}

double effective_sample_size(std::span<const double> draws) {
  const std::size_t n = draws.size();
  if (n < 2) return static_cast<double>(n);
  const double m = mean_of(draws);
  std::vector<double> c(n);
  for (std::size_t i = 0; i < n; ++i) c[i] = draws[i] - m;
  auto autocov = [&](std::size_t lag) {
    double s = 0.0;
    for (std::size_t i = 0; i + lag < n; ++i) s += c[i] * c[i + lag];
    return s / static_cast<double>(n);
  };
  const double c0 = autocov(0);
  if (!(c0 > 0.0)) return static_cast<double>(n);

  // sum of Gamma_k = rho_{2k} + rho_{2k+1} while positive
  double tau = -1.0;
  for (std::size_t k = 0; 2 * k + 1 < n; ++k) {
    const double gamma = (autocov(2 * k) + autocov(2 * k + 1)) / c0;
    if (!(gamma > 0.0)) break;
    tau += 2.0 * gamma;
  }
  const double ess = tau > 0.0 ? static_cast<double>(n) / tau : static_cast<double>(n);
  return std::min(ess, static_cast<double>(n));
}

double kde_mode(std::span<const double> draws) {
  if (draws.empty()) throw InsufficientSamples(0, 1);
  std::vector<double> x(draws.begin(), draws.end());
  std::sort(x.begin(), x.end());
  const double lo = x.front();
  const double hi = x.back();
  if (!(hi > lo)) return lo;

  const auto n = static_cast<double>(x.size());
  const double m = mean_of(x);
  double ss = 0.0;
  for (const double v : x) ss += (v - m) * (v - m);
  const double sd = std::sqrt(ss / (n - 1.0));
  const double iqr = sorted_quantile(x, 0.75) - sorted_quantile(x, 0.25);
  double spread = std::min(sd, iqr / 1.34);
  if (!(spread > 0.0)) spread = sd;
  const double h = 0.9 * spread * std::pow(n, -0.2);

  // the kernel is truncated at 8 bandwidths; exp(-32) is below any grid contrast
  const double reach = 8.0 * h;
  double best_x = lo;
  double best_density = -1.0;
  for (std::size_t g = 0; g < kModeGrid; ++g) {
    const double t = lo + (hi - lo) * static_cast<double>(g) / static_cast<double>(kModeGrid - 1);
    const auto first = std::lower_bound(x.begin(), x.end(), t - reach);
    const auto last = std::upper_bound(first, x.end(), t + reach);
    double density = 0.0;
    for (auto it = first; it != last; ++it) {
      const double z = (t - *it) / h;
      density += std::exp(-0.5 * z * z);
    }
    if (density > best_density) {
      best_density = density;
      best_x = t;
    }
  }
  return best_x;
}

DrawSummary summarize_draws(std::span<const double> draws) {
  if (draws.size() < kMinSummaryDraws) throw InsufficientSamples(draws.size(), kMinSummaryDraws);
  std::vector<double> sorted(draws.begin(), draws.end());
  std::sort(sorted.begin(), sorted.end());
  DrawSummary s;
  s.mean = mean_of(draws);
  s.median = sorted_quantile(sorted, 0.5);
  s.lower = sorted_quantile(sorted, 0.025);
  s.upper = sorted_quantile(sorted, 0.975);
  s.mode = kde_mode(sorted);
  s.ess = effective_sample_size(draws);
  return s;
}

namespace {

SummaryReport summarize_matrix(const PosteriorSamples& samples, const MatrixXd& beta) {
  if (samples.states.size() < kMinSummaryDraws) {
    throw InsufficientSamples(samples.states.size(), kMinSummaryDraws);
  }
  SummaryReport r;
  r.retained = samples.states.size();
  std::vector<double> column(static_cast<std::size_t>(beta.rows()));
  for (Index j = 0; j < beta.cols(); ++j) {
    for (Index k = 0; k < beta.rows(); ++k) column[static_cast<std::size_t>(k)] = beta(k, j);
    r.coefficients.push_back(summarize_draws(column));
  }
  const VectorXd s2 = samples.sigma2_draws();
  r.sigma2 = summarize_draws(std::span<const double>(s2.data(), static_cast<std::size_t>(s2.size())));
  if (samples.sampler == SamplerKind::SpikeSlab) {
    const VectorXd inc = inclusion_probabilities(samples);
    r.inclusion = std::vector<double>(inc.data(), inc.data() + inc.size());
  }
  return r;
}

}  // namespace

SummaryReport summarize(const PosteriorSamples& samples) {
  return summarize_matrix(samples, samples.beta_draws());
}

SummaryReport summarize(const PosteriorSamples& samples, const Dataset& d) {
  if (samples.p() != d.p()) throw DimensionMismatch("samples and dataset disagree on p");
  MatrixXd beta = samples.beta_draws();
  for (Index j = 0; j < beta.cols(); ++j) beta.col(j) /= d.col_sds()(j);
  return summarize_matrix(samples, beta);
}

}  // namespace bayesreg
