#include <doctest.h>

#include "oracles.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/priors.hpp>
#include <bayesreg/rng.hpp>

#include <boost/math/quadrature/exp_sinh.hpp>

#include <cmath>
#include <numbers>

using namespace bayesreg;
using std::numbers::pi;

TEST_SUITE("log_prior and penalty") {
  TEST_CASE("densities at the origin") {
    CHECK(log_prior(PriorSpec::lasso(1.0), 0.0) == doctest::Approx(std::log(0.5)));
    CHECK(log_prior(PriorSpec::cauchy(1.0), 0.0) == doctest::Approx(-std::log(pi)));
    CHECK(log_prior(PriorSpec::ridge(2.0), 0.0) == doctest::Approx(-std::log(2.0 * std::sqrt(2.0 * pi))));
  }

  TEST_CASE("penalty values") {
    CHECK(penalty(PriorSpec::ridge(1.0), 2.0) == doctest::Approx(2.0));
    CHECK(penalty(PriorSpec::lasso(0.5), -1.0) == doctest::Approx(2.0));
    CHECK(penalty(PriorSpec::horseshoe(1.0), std::sqrt(2.0)) == doctest::Approx(-std::log(std::log(2.0))));
    CHECK(penalty(PriorSpec::horseshoe(1.0), std::sqrt(2.0)) == doctest::Approx(0.36651).epsilon(1e-5));
    CHECK(horseshoe_penalty(2.0, 1.0) == doctest::Approx(-std::log(std::log(9.0))));
  }

  TEST_CASE("horseshoe bound is undefined at zero") {
    CHECK_THROWS_AS((void)horseshoe_penalty(1.0, 0.0), UndefinedAtZero);
    CHECK_THROWS_AS((void)penalty(PriorSpec::horseshoe(1.0), 0.0), UndefinedAtZero);
    CHECK(std::isinf(log_prior(PriorSpec::horseshoe(1.0), 0.0)));
  }

  TEST_CASE("horseshoe bound is increasing in |beta|") {
    double prev = -std::numeric_limits<double>::infinity();
    for (int k = -40; k <= 40; ++k) {
      const double beta = std::pow(10.0, k / 10.0);
      const double v = horseshoe_penalty(1.0, beta);
      CHECK(v > prev);
      prev = v;
    }
    CHECK(horseshoe_penalty(1.0, 1e-8) < -3.0);
    CHECK(horseshoe_penalty(1.0, 1e6) == doctest::Approx(-std::log(2.0 / 1e12)).epsilon(1e-9));
  }

  TEST_CASE("penalty plus log prior is constant") {
    for (const PriorSpec& prior : {PriorSpec::ridge(0.7), PriorSpec::lasso(1.3), PriorSpec::cauchy(0.4)}) {
      const double c = penalty(prior, 0.1) + log_prior(prior, 0.1);
      for (int i = 0; i < 100; ++i) {
        const double beta = -5.0 + 10.0 * i / 99.0;
        CHECK(std::abs(penalty(prior, beta) + log_prior(prior, beta) - c) < 1e-10);
      }
    }
  }

  TEST_CASE("penalties are even") {
    for (const PriorSpec& prior : {PriorSpec::ridge(0.7), PriorSpec::lasso(1.3), PriorSpec::cauchy(0.4),
                                   PriorSpec::horseshoe(0.9), PriorSpec::spike_slab(0.3, 1.5)}) {
      for (double beta : {0.01, 0.5, 1.0, 3.7}) CHECK(penalty(prior, beta) == penalty(prior, -beta));
    }
  }

  TEST_CASE("exact densities integrate to one") {
    boost::math::quadrature::exp_sinh<double> integrator;
    for (const PriorSpec& prior : {PriorSpec::ridge(0.7), PriorSpec::lasso(1.3), PriorSpec::cauchy(0.4)}) {
      const double half = integrator.integrate([&](double b) { return std::exp(log_prior(prior, b)); }, 0.0,
                                               std::numeric_limits<double>::infinity());
      CHECK(std::abs(2.0 * half - 1.0) < 1e-6);
    }
  }

  TEST_CASE("spike-and-slab log prior") {
    const PriorSpec prior = PriorSpec::spike_slab(0.2, 2.0);
    CHECK(log_prior(prior, 0.0) == doctest::Approx(std::log(0.8)));
    CHECK(log_prior(prior, 1.0) ==
          doctest::Approx(std::log(0.2) - 0.5 * std::log(2.0 * pi * 4.0) - 1.0 / 8.0));
  }

  TEST_CASE("invalid hyperparameters") {
    CHECK_THROWS_AS((void)PriorSpec::ridge(0.0), ValidationError);
    CHECK_THROWS_AS((void)PriorSpec::horseshoe(-1.0), ValidationError);
    CHECK_THROWS_AS((void)PriorSpec::spike_slab(1.0, 1.0), ValidationError);
    CHECK_THROWS_AS((void)PriorSpec::spike_slab(0.5, 0.0), ValidationError);
  }
}

TEST_SUITE("horseshoe density") {
  TEST_CASE("quadrature matches two independent evaluations") {
    for (double tau : {0.5, 1.0, 2.0}) {
      for (double beta : {0.01, 0.3, 1.0, 4.0, 1e3, 1e8, 1e12}) {
        const double v = horseshoe_density_quadrature(tau, beta, 1e-10);
        CHECK(std::abs(v - oracle::horseshoe_density_expint(tau, beta)) <= 1e-8 * v);
      }
    }
    const double v = horseshoe_density_quadrature(1.0, 1.0, 1e-10);
    CHECK(std::abs(v - oracle::horseshoe_density_exp_sinh(1.0, 1.0)) <= 1e-8 * v);
  }

  TEST_CASE("symmetric and infinite at the origin") {
    for (double beta : {0.1, 0.9, 2.5}) {
      CHECK(std::abs(horseshoe_density_quadrature(1.0, beta) - horseshoe_density_quadrature(1.0, -beta)) < 1e-12);
    }
    CHECK(std::isinf(horseshoe_density_quadrature(1.0, 0.0)));
  }
}

TEST_SUITE("scale mixtures") {
  TEST_CASE("Laplace mixture closed forms") {
    CHECK(laplace_mixture_check(1.0, 1.0, 0.0).closed_form == doctest::Approx(0.5));
    const MixtureCheck m = laplace_mixture_check(1.0, 1.0, 2.0);
    CHECK(m.closed_form == doctest::Approx(0.5 * std::exp(-2.0)));
    CHECK(std::abs(m.mixture_value - 0.5 * std::exp(-2.0)) < 1e-6);
    CHECK(laplace_mixture_check(2.0, 1.0, 1.0).closed_form == doctest::Approx(std::exp(-2.0)));
  }

  TEST_CASE("conversion helpers round-trip") {
    CHECK(lasso_weight_from_scale(2.0, 0.5) == doctest::Approx(8.0));
    CHECK(laplace_scale_from_weight(2.0, lasso_weight_from_scale(2.0, 0.5)) == doctest::Approx(0.5));
    CHECK(laplace_rate_from_mixture(3.0, 2.0) == doctest::Approx(1.5));
  }
}

TEST_SUITE("spike-and-slab objective") {
  Dataset toy() {
    MatrixXd x(3, 2);
    x << 1.0, 0.2, -0.5, 1.1, 2.0, -0.7;
    VectorXd y(3);
    y << 1.5, -0.3, 2.2;
    return standardize(x, y);
  }

  TEST_CASE("empty model") {
    const Dataset d = toy();
    const double v = spike_slab_neg_log_posterior(Eigen::VectorXi::Zero(2), VectorXd::Zero(2), 0.3, 1.0, 0.5, d);
    CHECK(v == doctest::Approx(d.y_centered().squaredNorm() / (2.0 * 0.5)));
  }

  TEST_CASE("theta one half drops the count term") {
    const Dataset d = toy();
    Eigen::VectorXi g(2);
    g << 1, 1;
    VectorXd a(2);
    a << 0.4, -0.2;
    const VectorXd r = d.y_centered() - d.x_std() * a;
    const double expected = r.squaredNorm() / (2.0 * 0.7) + a.squaredNorm() / (2.0 * 1.3);
    CHECK(spike_slab_neg_log_posterior(g, a, 0.5, 1.3, 0.7, d) == doctest::Approx(expected).epsilon(1e-13));
  }

  TEST_CASE("exhaustive minimum over all four patterns") {
    const Dataset d = toy();
    const double theta = 0.3, s2 = 1.0, s2e = 0.25;
    double best = std::numeric_limits<double>::infinity();
    Eigen::VectorXi best_g;
    VectorXd best_a;
    for (unsigned mask = 0; mask < 4; ++mask) {
      Eigen::VectorXi g(2);
      g << (mask & 1u ? 1 : 0), (mask & 2u ? 1 : 0);
      const MatrixXd xg = oracle::select_columns(d.x_std(), mask);
      VectorXd a = VectorXd::Zero(2);
      double obj = d.y_centered().squaredNorm() / (2.0 * s2e);
      if (xg.cols() > 0) {
        const MatrixXd prec = xg.transpose() * xg / s2e + MatrixXd::Identity(xg.cols(), xg.cols()) / s2;
        const VectorXd ag = prec.ldlt().solve(xg.transpose() * d.y_centered() / s2e);
        Index k = 0;
        for (Index j = 0; j < 2; ++j) {
          if (g(j)) a(j) = ag(k++);
        }
        obj = (d.y_centered() - xg * ag).squaredNorm() / (2.0 * s2e) + ag.squaredNorm() / (2.0 * s2) +
              std::log((1.0 - theta) / theta) * static_cast<double>(g.sum());
      }
      if (obj < best) {
        best = obj;
        best_g = g;
        best_a = a;
      }
    }
    CHECK(spike_slab_neg_log_posterior(best_g, best_a, theta, s2, s2e, d) == doctest::Approx(best).epsilon(1e-12));
  }

  TEST_CASE("dimension mismatch") {
    CHECK_THROWS_AS(
        (void)spike_slab_neg_log_posterior(Eigen::VectorXi::Zero(3), VectorXd::Zero(2), 0.5, 1.0, 1.0, toy()),
        DimensionMismatch);
  }
}

TEST_SUITE("penalty contours") {
  TEST_CASE("ridge level set is a circle") {
    const PenaltyGrid g = penalty_contours(PriorSpec::ridge(1.0), GridSpec{});
    const double r0 = std::hypot(g.level_set.front().first, g.level_set.front().second);
    for (const auto& [a, b] : g.level_set) CHECK(std::abs(std::hypot(a, b) - r0) < 1e-12);
    CHECK(r0 == doctest::Approx(1.0).epsilon(1e-12));
  }

  TEST_CASE("lasso level set is a diamond") {
    const PenaltyGrid g = penalty_contours(PriorSpec::lasso(1.0), GridSpec{});
    const double c = std::abs(g.level_set.front().first) + std::abs(g.level_set.front().second);
    for (const auto& [a, b] : g.level_set) CHECK(std::abs(std::abs(a) + std::abs(b) - c) < 1e-12);
  }

  TEST_CASE("grid values and horseshoe axis sentinel") {
    const GridSpec spec{-2.0, 2.0, 5};
    const PenaltyGrid ridge = penalty_contours(PriorSpec::ridge(1.0), spec);
    CHECK(ridge.beta_grid.size() == 5);
    CHECK(ridge.values.size() == 25);
    CHECK(ridge.at(0, 4) == doctest::Approx(4.0));
    const PenaltyGrid hs = penalty_contours(PriorSpec::horseshoe(1.0), spec);
    CHECK(std::isinf(hs.at(2, 0)));
    CHECK(hs.at(2, 0) < 0.0);
    CHECK(std::isfinite(hs.at(1, 1)));
    CHECK(hs.at(1, 1) == doctest::Approx(2.0 * horseshoe_penalty(1.0, 1.0)));
  }
}
