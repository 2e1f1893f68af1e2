#pragma once

#include "bayesreg/model_core.hpp"
#include "bayesreg/rng.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bayesreg {

/// Sparse r-spike mean vector: r leading entries sqrt(d / p), zeros after.
struct SpikeSignal {
  std::size_t p = 0;
  std::size_t r = 0;
  double total_energy = 0.0;  ///< d
  VectorXd theta;

  /// Throws ValidationError unless r <= p and d >= 0.
  static SpikeSignal make(std::size_t p, std::size_t r, double d);
  double norm2() const { return theta.squaredNorm(); }
};

/// Plug-in James-Stein rule (1 - (p - 2) / ||y||^2) y. The factor may go
/// negative unless `positive_part` is set. Throws DimensionTooSmall for
/// p < 3 and ZeroVector for y = 0.
VectorXd james_stein(const VectorXd& y, bool positive_part = false);

enum class ThresholdMode { Hard, Soft };

VectorXd threshold_estimator(const VectorXd& y, double t, ThresholdMode mode);

/// sqrt(2 log p).
double universal_threshold(std::size_t p);

enum class EstimatorKind { Mle, JamesStein, JamesSteinPositivePart, HardThreshold, SoftThreshold };

struct Estimator {
  EstimatorKind kind = EstimatorKind::Mle;
  double threshold = 0.0;

  std::string label() const;
  VectorXd apply(const VectorXd& y) const;
};

struct RiskReport {
  std::string estimator;
  double mc_risk = 0.0;  ///< Monte Carlo estimate of E||theta_hat - theta||^2
  double mc_se = 0.0;
  std::optional<double> lower_bound;  ///< James-Stein rules only
  std::optional<double> upper_bound;
  std::size_t replications = 0;
};

struct JsBounds {
  double lower;
  double upper;
  bool consistent() const { return lower <= upper; }
};

/// p ||theta||^2 / (p + ||theta||^2)  and  2 + p ||theta||^2 / (d + ||theta||^2).
JsBounds js_bounds(const SpikeSignal& signal);

inline constexpr std::size_t kMinReplications = 1000;
inline constexpr std::size_t kReplicationBlock = 1000;

/// Squared-error risk under y = theta + eps, eps ~ N(0, I). Replications are
/// split into fixed blocks of 1000, block b drawing from rng.substream(b), so
/// the result does not depend on `workers`. Throws ValidationError when
/// replications < 1000.
RiskReport mc_risk(const RngStream& rng, const Estimator& estimator, const SpikeSignal& signal,
                   std::size_t replications, unsigned workers = 1);

struct ExperimentOptions {
  bool positive_part = false;  ///< add the positive-part James-Stein row
  std::optional<double> threshold;  ///< defaults to sqrt(2 log p)
  unsigned workers = 1;
};

/// MLE, James-Stein, hard and soft thresholding on a shared noise stream,
/// rows sorted by ascending risk.
std::vector<RiskReport> js_vs_threshold_experiment(const RngStream& rng, std::size_t p, std::size_t r,
                                                   double d, std::size_t replications,
                                                   const ExperimentOptions& options = {});

}  // namespace bayesreg
