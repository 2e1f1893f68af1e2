#include <doctest.h>

#include "oracles.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/risk_lab.hpp>

#include <cmath>

using namespace bayesreg;

TEST_SUITE("estimators") {
  TEST_CASE("James-Stein arithmetic") {
    VectorXd y = VectorXd::Zero(5);
    y(0) = 2.0;
    const VectorXd js = james_stein(y);
    CHECK(js(0) == doctest::Approx(0.5));
    CHECK(js.tail(4).norm() == 0.0);
    VectorXd z = VectorXd::Constant(5, std::sqrt(3.0 / 5.0));
    CHECK(james_stein(z).norm() < 1e-15);
    const VectorXd big = VectorXd::Constant(5, 1e8);
    CHECK((james_stein(big) - big).norm() / big.norm() < 1e-15);
  }

  TEST_CASE("negative factor unless positive part") {
    VectorXd y = VectorXd::Constant(4, 0.1);
    CHECK(james_stein(y)(0) < 0.0);
    CHECK(james_stein(y, true).norm() == 0.0);
  }

  TEST_CASE("ray formula") {
    VectorXd y(3);
    y << 0.3, -1.2, 2.0;
    for (double c : {0.5, 2.0, 10.0}) {
      const VectorXd expected = c * (1.0 - 1.0 / (c * c * y.squaredNorm())) * y;
      CHECK((james_stein(c * y) - expected).norm() < 1e-12);
    }
  }

  TEST_CASE("errors") {
    CHECK_THROWS_AS((void)james_stein(VectorXd::Ones(2)), DimensionTooSmall);
    CHECK_THROWS_AS((void)james_stein(VectorXd::Zero(4)), ZeroVector);
  }

  TEST_CASE("thresholding") {
    VectorXd y(2);
    y << 1.0, 3.0;
    CHECK(threshold_estimator(y, 2.0, ThresholdMode::Hard) == Eigen::Vector2d(0.0, 3.0));
    CHECK(threshold_estimator(y, 0.0, ThresholdMode::Hard) == y);
    CHECK(threshold_estimator(y, 0.0, ThresholdMode::Soft) == y);
    CHECK(threshold_estimator(VectorXd::Constant(1, -3.0), 1.0, ThresholdMode::Soft)(0) == -2.0);
    RngStream rng(1);
    VectorXd w(50);
    for (Index i = 0; i < 50; ++i) w(i) = 3.0 * rng.normal();
    const VectorXd s = threshold_estimator(w, 1.3, ThresholdMode::Soft);
    CHECK((s.cwiseAbs().array() <= w.cwiseAbs().array()).all());
    CHECK(universal_threshold(100) == doctest::Approx(std::sqrt(2.0 * std::log(100.0))));
  }
}

TEST_SUITE("signal and bounds") {
  TEST_CASE("spike signal") {
    const SpikeSignal s = SpikeSignal::make(10, 3, 5.0);
    CHECK(s.theta(0) == doctest::Approx(std::sqrt(0.5)));
    CHECK(s.theta(3) == 0.0);
    CHECK(s.norm2() == doctest::Approx(3.0 * 5.0 / 10.0));
    CHECK_THROWS_AS((void)SpikeSignal::make(3, 4, 1.0), ValidationError);
    CHECK_THROWS_AS((void)SpikeSignal::make(3, 1, -1.0), ValidationError);
  }

  TEST_CASE("bounds at the origin and at energy p") {
    const JsBounds origin = js_bounds(SpikeSignal::make(10, 0, 0.0));
    CHECK(origin.lower == 0.0);
    CHECK(origin.upper == doctest::Approx(2.0));
    // r = p and d = p give ||theta||^2 = p
    const JsBounds at_p = js_bounds(SpikeSignal::make(10, 10, 10.0));
    CHECK(at_p.lower == doctest::Approx(5.0));
    CHECK(at_p.upper == doctest::Approx(7.0));
    CHECK(at_p.consistent());
    CHECK(js_bounds(SpikeSignal::make(10, 10, 1e9)).lower == doctest::Approx(10.0).epsilon(1e-6));
  }
}

TEST_SUITE("monte carlo risk") {
  TEST_CASE("origin risks") {
    const SpikeSignal zero = SpikeSignal::make(10, 0, 0.0);
    const RiskReport js = mc_risk(RngStream(2), Estimator{EstimatorKind::JamesStein}, zero, 100000);
    CHECK(std::abs(js.mc_risk - 2.0) < 3.0 * js.mc_se);
    CHECK(js.lower_bound.has_value());
    const RiskReport mle = mc_risk(RngStream(3), Estimator{EstimatorKind::Mle}, zero, 100000);
    CHECK(std::abs(mle.mc_risk - 10.0) < 3.0 * mle.mc_se);
    CHECK_FALSE(mle.lower_bound.has_value());
    CHECK(mle.mc_se > 0.0);
  }

  TEST_CASE("MLE risk is p for a nonzero signal") {
    const RiskReport mle = mc_risk(RngStream(4), Estimator{EstimatorKind::Mle}, SpikeSignal::make(20, 5, 40.0), 50000);
    CHECK(std::abs(mle.mc_risk - 20.0) < 3.0 * mle.mc_se);
  }

  TEST_CASE("worker count does not change the result") {
    const SpikeSignal s = SpikeSignal::make(20, 4, 10.0);
    const Estimator e{EstimatorKind::SoftThreshold, universal_threshold(20)};
    const RiskReport one = mc_risk(RngStream(5), e, s, 7000, 1);
    const RiskReport four = mc_risk(RngStream(5), e, s, 7000, 4);
    CHECK(one.mc_risk == four.mc_risk);
    CHECK(one.mc_se == four.mc_se);
  }

  TEST_CASE("doubling replications shrinks the standard error by sqrt 2") {
    const SpikeSignal s = SpikeSignal::make(10, 2, 5.0);
    const Estimator e{EstimatorKind::JamesStein};
    const double se1 = mc_risk(RngStream(6), e, s, 20000).mc_se;
    const double se2 = mc_risk(RngStream(7), e, s, 40000).mc_se;
    CHECK(std::abs(se1 / se2 - std::sqrt(2.0)) < 0.2 * std::sqrt(2.0));
  }

  TEST_CASE("too few replications") {
    CHECK_THROWS_AS((void)mc_risk(RngStream(1), Estimator{}, SpikeSignal::make(5, 0, 0.0), 999), ValidationError);
  }

  TEST_CASE("sparse signal favours thresholding, dense favours James-Stein") {
    const double t = universal_threshold(100);
    const double height = 2.0 * t;
    const auto sparse = js_vs_threshold_experiment(RngStream(8), 100, 5, height * height * 100.0, 20000);
    REQUIRE(sparse.size() == 4);
    for (std::size_t i = 1; i < sparse.size(); ++i) CHECK(sparse[i - 1].mc_risk <= sparse[i].mc_risk);
    auto find = [](const std::vector<RiskReport>& rows, const std::string& label) {
      for (const auto& r : rows) {
        if (r.estimator == label) return r;
      }
      FAIL("missing row " << label);
      return rows.front();
    };
    const RiskReport js = find(sparse, "james-stein");
    const RiskReport hard = find(sparse, "hard-threshold");
    CHECK(js.mc_risk - hard.mc_risk > 3.0 * std::hypot(js.mc_se, hard.mc_se));

    const auto dense = js_vs_threshold_experiment(RngStream(9), 100, 100, 100.0, 20000);
    const RiskReport djs = find(dense, "james-stein");
    for (const char* label : {"hard-threshold", "soft-threshold"}) {
      const RiskReport thr = find(dense, label);
      CHECK(thr.mc_risk - djs.mc_risk > 3.0 * std::hypot(djs.mc_se, thr.mc_se));
    }
    ExperimentOptions opts;
    opts.positive_part = true;
    CHECK(js_vs_threshold_experiment(RngStream(9), 10, 1, 1.0, 1000, opts).size() == 5);
  }
}
