#include "bayesreg/risk_lab.hpp"

#include "bayesreg/error.hpp"
#include "bayesreg/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace bayesreg {

namespace {

// Neumaier compensated sum
struct CompensatedSum {
  double sum = 0.0;
  double carry = 0.0;
  void add(double v) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  double value() const { return sum + carry; }
};

}  // namespace

SpikeSignal SpikeSignal::make(std::size_t p, std::size_t r, double d) {
  if (p < 1) throw ValidationError("signal dimension must be positive");
  if (r > p) throw ValidationError("spike count r cannot exceed p");
  if (!(d >= 0.0) || !std::isfinite(d)) throw ValidationError("signal energy d must be finite and >= 0");
  SpikeSignal s;
  s.p = p;
  s.r = r;
  s.total_energy = d;
  s.theta = VectorXd::Zero(static_cast<Index>(p));
  s.theta.head(static_cast<Index>(r)).setConstant(std::sqrt(d / static_cast<double>(p)));
  return s;
}

VectorXd james_stein(const VectorXd& y, bool positive_part) {
  const auto p = static_cast<std::size_t>(y.size());
  if (p < 3) throw DimensionTooSmall(p, 3);
  const double norm2 = y.squaredNorm();
  if (norm2 == 0.0) throw ZeroVector();
  double factor = 1.0 - static_cast<double>(p - 2) / norm2;
  if (positive_part && factor < 0.0) factor = 0.0;
  return factor * y;
}

VectorXd threshold_estimator(const VectorXd& y, double t, ThresholdMode mode) {
  if (!(t >= 0.0)) throw ValidationError("threshold must be non-negative");
  VectorXd out(y.size());
  for (Index i = 0; i < y.size(); ++i) {
    const double v = y(i);
    if (mode == ThresholdMode::Hard) {
      out(i) = std::abs(v) > t ? v : 0.0;
    } else {
      const double mag = std::max(std::abs(v) - t, 0.0);
      out(i) = v < 0.0 ? -mag : mag;
    }
  }
  return out;
}

double universal_threshold(std::size_t p) {
  if (p < 1) throw ValidationError("dimension must be positive");
  return std::sqrt(2.0 * std::log(static_cast<double>(p)));
}

std::string Estimator::label() const {
  switch (kind) {
    case EstimatorKind::Mle:
      return "mle";
    case EstimatorKind::JamesStein:
      return "james-stein";
    case EstimatorKind::JamesSteinPositivePart:
      return "james-stein+";
    case EstimatorKind::HardThreshold:
      return "hard-threshold";
    case EstimatorKind::SoftThreshold:
      return "soft-threshold";
  }
  return "unknown";
}

VectorXd Estimator::apply(const VectorXd& y) const {
  switch (kind) {
    case EstimatorKind::Mle:
      return y;
    case EstimatorKind::JamesStein:
      return james_stein(y, false);
    case EstimatorKind::JamesSteinPositivePart:
      return james_stein(y, true);
    case EstimatorKind::HardThreshold:
      return threshold_estimator(y, threshold, ThresholdMode::Hard);
    case EstimatorKind::SoftThreshold:
      return threshold_estimator(y, threshold, ThresholdMode::Soft);
  }
  return y;
}

JsBounds js_bounds(const SpikeSignal& signal) {
  const auto p = static_cast<double>(signal.p);
  const double t2 = signal.norm2();
  const double lower = p * t2 / (p + t2);
  const double denom = signal.total_energy + t2;
  const double upper = 2.0 + (denom > 0.0 ? p * t2 / denom : 0.0);
  return {lower, upper};
}

namespace {

struct BlockTotals {
  CompensatedSum loss;
  CompensatedSum loss2;
};

std::vector<RiskReport> run_risk(const RngStream& rng, const std::vector<Estimator>& estimators,
                                 const SpikeSignal& signal, std::size_t replications, unsigned workers) {
  if (replications < kMinReplications) {
    std::ostringstream os;
    os << "need at least " << kMinReplications << " replications, got " << replications;
    throw ValidationError(os.str());
  }
  for (const Estimator& e : estimators) {
    if ((e.kind == EstimatorKind::JamesStein || e.kind == EstimatorKind::JamesSteinPositivePart) &&
        signal.p < 3) {
      throw DimensionTooSmall(signal.p, 3);
    }
  }
  const std::size_t blocks = (replications + kReplicationBlock - 1) / kReplicationBlock;
  const std::size_t m = estimators.size();
  std::vector<BlockTotals> totals(blocks * m);

  parallel_for(blocks, workers, [&](std::size_t b) {
    RngStream stream = rng.substream(b);
    const std::size_t begin = b * kReplicationBlock;
    const std::size_t end = std::min(replications, begin + kReplicationBlock);
    VectorXd y(signal.theta.size());
    for (std::size_t rep = begin; rep < end; ++rep) {
      for (Index i = 0; i < y.size(); ++i) y(i) = signal.theta(i) + stream.normal();
      for (std::size_t e = 0; e < m; ++e) {
        const double loss = (estimators[e].apply(y) - signal.theta).squaredNorm();
        totals[b * m + e].loss.add(loss);
        totals[b * m + e].loss2.add(loss * loss);
      }
    }
  });

  const JsBounds bounds = js_bounds(signal);
  std::vector<RiskReport> reports;
  const auto n = static_cast<double>(replications);
  for (std::size_t e = 0; e < m; ++e) {
    CompensatedSum s;
    CompensatedSum s2;
    for (std::size_t b = 0; b < blocks; ++b) {
      s.add(totals[b * m + e].loss.value());
      s2.add(totals[b * m + e].loss2.value());
    }
    const double mean = s.value() / n;
    const double var = std::max(0.0, (s2.value() - n * mean * mean) / (n - 1.0));
    RiskReport r;
    r.estimator = estimators[e].label();
    r.mc_risk = mean;
    r.mc_se = std::sqrt(var / n);
    r.replications = replications;
    if (estimators[e].kind == EstimatorKind::JamesStein) {
      r.lower_bound = bounds.lower;
      r.upper_bound = bounds.upper;
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

}  // namespace

RiskReport mc_risk(const RngStream& rng, const Estimator& estimator, const SpikeSignal& signal,
                   std::size_t replications, unsigned workers) {
  return run_risk(rng, {estimator}, signal, replications, workers).front();
}

std::vector<RiskReport> js_vs_threshold_experiment(const RngStream& rng, std::size_t p, std::size_t r,
                                                   double d, std::size_t replications,
                                                   const ExperimentOptions& options) {
  if (p < 3) throw DimensionTooSmall(p, 3);
  const SpikeSignal signal = SpikeSignal::make(p, r, d);
  const double t = options.threshold.value_or(universal_threshold(p));
  std::vector<Estimator> estimators = {
      {EstimatorKind::Mle, 0.0},
      {EstimatorKind::JamesStein, 0.0},
      {EstimatorKind::HardThreshold, t},
      {EstimatorKind::SoftThreshold, t},
  };
  if (options.positive_part) estimators.push_back({EstimatorKind::JamesSteinPositivePart, 0.0});
  std::vector<RiskReport> reports = run_risk(rng, estimators, signal, replications, options.workers);
  std::stable_sort(reports.begin(), reports.end(),
                   [](const RiskReport& a, const RiskReport& b) { return a.mc_risk < b.mc_risk; });
  return reports;
}

}  // namespace bayesreg
