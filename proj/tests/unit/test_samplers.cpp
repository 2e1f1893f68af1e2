#include <doctest.h>

#include "oracles.hpp"

#include <bayesreg/error.hpp>
#include <bayesreg/samplers.hpp>
#include <bayesreg/summary.hpp>

#include <cmath>

using namespace bayesreg;

namespace {

MatrixXd uniform_matrix(std::uint64_t seed, Index n, Index p) {
  RngStream rng(seed);
  MatrixXd x(n, p);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < p; ++j) x(i, j) = 2.0 * rng.uniform() - 1.0;
  return x;
}

/// y = X beta + sd * noise on a Uniform[-1, 1] design.
Dataset regression(std::uint64_t seed, Index n, const VectorXd& beta, double sd) {
  const MatrixXd x = uniform_matrix(seed, n, beta.size());
  RngStream rng(seed, 1);
  VectorXd y = x * beta;
  for (Index i = 0; i < n; ++i) y(i) += sd * rng.normal();
  return standardize(x, y);
}

VectorXd sparse_ten() {
  VectorXd b = VectorXd::Zero(10);
  b << 2.0, 2.5, 3.0, 0, 0, 0, 0, 0, 0, 0;
  return b;
}

std::vector<double> column(const MatrixXd& draws, Index j) {
  return std::vector<double>(draws.col(j).data(), draws.col(j).data() + draws.rows());
}

bool same_states(const PosteriorSamples& a, const PosteriorSamples& b) {
  if (a.states.size() != b.states.size()) return false;
  for (std::size_t k = 0; k < a.states.size(); ++k) {
    const ChainState& s = a.states[k];
    const ChainState& t = b.states[k];
    if (s.beta != t.beta || s.sigma2 != t.sigma2 || s.tau2 != t.tau2 || s.lambda2 != t.lambda2 ||
        s.tau2_global != t.tau2_global || s.gamma != t.gamma || s.lambda_shrink != t.lambda_shrink) {
      return false;
    }
  }
  return true;
}

void check_positive(const PosteriorSamples& s) {
  for (const ChainState& st : s.states) {
    CHECK(st.sigma2 > 0.0);
    if (st.tau2.size() > 0) CHECK(st.tau2.minCoeff() > 0.0);
    if (st.lambda2.size() > 0) CHECK(st.lambda2.minCoeff() > 0.0);
    if (st.nu.size() > 0) CHECK(st.nu.minCoeff() > 0.0);
    if (st.lambda2.size() > 0) CHECK(st.tau2_global > 0.0);
    if (st.gamma.size() > 0) CHECK(((st.gamma.array() == 0) || (st.gamma.array() == 1)).all());
  }
}

}  // namespace

TEST_SUITE("run bookkeeping") {
  TEST_CASE("retained count") {
    CHECK(RunLength{100, 0, 1}.retained() == 100);
    CHECK(RunLength{100, 20, 3}.retained() == 26);
    CHECK_THROWS_AS(RunLength({10, 10, 1}).validate(), ValidationError);
    CHECK_THROWS_AS(RunLength({10, 0, 0}).validate(), ValidationError);
    const Dataset d = regression(1, 30, sparse_ten().head(3), 1.0);
    CHECK(lasso_gibbs_run(RngStream(1), d, RunLength{100, 0, 1}).states.size() == 100);
    CHECK(horseshoe_gibbs_run(RngStream(1), d, RunLength{100, 20, 3}).states.size() == 26);
  }

  TEST_CASE("gaussian draw escalates jitter and then gives up") {
    RngStream rng(2);
    MatrixXd a(2, 2);
    a << 1.0, 1.0, 1.0, 1.0;
    const VectorXd v = draw_gaussian_precision(rng, a, VectorXd::Ones(2), 1.0);
    CHECK(v.allFinite());
    MatrixXd neg = -MatrixXd::Identity(2, 2);
    CHECK_THROWS_AS((void)draw_gaussian_precision(rng, neg, VectorXd::Ones(2), 1.0), NumericalBreakdown);
  }
}

TEST_SUITE("lasso") {
  TEST_CASE("initialization on an orthonormal design") {
    const Eigen::HouseholderQR<MatrixXd> qr(uniform_matrix(3, 20, 4));
    const MatrixXd q = qr.householderQ() * MatrixXd::Identity(20, 4);
    const VectorXd y = q * VectorXd::Ones(4);
    const ChainState s = lasso_gibbs_init(SufficientStats::from(q, y));
    for (Index j = 0; j < 4; ++j) CHECK(s.beta(j) == doctest::Approx(0.5).epsilon(1e-12));
    // residual y - Q beta = Q (1/2) has squared norm 4 / 4 = 1
    CHECK(s.sigma2 == doctest::Approx(1.0 / 20.0).epsilon(1e-12));
    CHECK((s.tau2 - s.beta.array().square().matrix()).norm() == 0.0);
    CHECK(s.lambda_shrink == doctest::Approx(4.0 * std::sqrt(s.sigma2) / 2.0).epsilon(1e-12));
  }

  TEST_CASE("lambda formula and zero coefficient perturbation") {
    SufficientStats stats = SufficientStats::empty(10);
    stats.xtx = MatrixXd::Identity(10, 10);
    stats.xty = VectorXd::Constant(10, 1.0);
    stats.xty(9) = 0.0;
    stats.yty = 11.0;
    stats.n = 10;
    const ChainState s = lasso_gibbs_init(stats);
    CHECK(s.beta(9) == 1e-8);
    CHECK(s.tau2(9) == doctest::Approx(1e-16));
    CHECK(s.lambda_shrink ==
          doctest::Approx(10.0 * std::sqrt(s.sigma2) / s.beta.cwiseAbs().sum()).epsilon(1e-12));
  }

  TEST_CASE("frozen scales match the conjugate posterior mean") {
    const Dataset d = regression(4, 40, sparse_ten().head(3), 1.0);
    const SufficientStats stats = SufficientStats::from(d);
    ChainState init = lasso_gibbs_init(stats);
    init.tau2 = VectorXd::Ones(3);
    init.sigma2 = 1.0;
    LassoOptions opts;
    opts.freeze_scales = true;
    opts.freeze_sigma2 = true;
    const PosteriorSamples s = lasso_gibbs_run(RngStream(4), stats, init, RunLength{10000, 0, 1}, opts);
    const MatrixXd a = stats.xtx + MatrixXd::Identity(3, 3);
    const VectorXd mean = a.ldlt().solve(stats.xty);
    const MatrixXd draws = s.beta_draws();
    for (Index j = 0; j < 3; ++j) {
      const auto col = column(draws, j);
      CHECK(std::abs(oracle::mean(col) - mean(j)) < 3.0 * oracle::batch_means_se(col));
    }
  }

  TEST_CASE("small coefficients shrink their local variance") {
    // data pinning beta near 0 makes the inverse Gaussian mean huge
    SufficientStats stats = SufficientStats::empty(1);
    stats.xtx(0, 0) = 1e8;
    stats.n = 100;
    ChainState s;
    s.beta = VectorXd::Constant(1, 1e-4);
    s.tau2 = VectorXd::Constant(1, 10.0);
    s.sigma2 = 1.0;
    s.lambda_shrink = 1.0;
    LassoOptions opts;
    opts.freeze_sigma2 = true;
    opts.lambda_mode = LambdaMode::fixed_at(1.0);
    RngStream rng(5);
    int smaller = 0;
    for (int i = 0; i < 200; ++i) smaller += lasso_gibbs_step(rng, s, stats, opts).tau2(0) < s.tau2(0);
    CHECK(smaller >= 190);

    // precision 1/tau2 grows as beta approaches zero
    SufficientStats loose = SufficientStats::empty(1);
    loose.xtx(0, 0) = 1e8;
    loose.xty(0) = 1e8;
    loose.n = 100;
    double near_zero = 0.0, near_one = 0.0;
    for (int i = 0; i < 2000; ++i) {
      near_zero += 1.0 / lasso_gibbs_step(rng, s, stats, opts).tau2(0);
      near_one += 1.0 / lasso_gibbs_step(rng, s, loose, opts).tau2(0);
    }
    CHECK(near_zero > 100.0 * near_one);
  }

  TEST_CASE("prior consistency: Laplace marginal with no data") {
    // independent short chains, last state of each
    const double lambda = 1.5;
    const SufficientStats stats = SufficientStats::empty(1);
    LassoOptions opts;
    opts.freeze_sigma2 = true;
    opts.lambda_mode = LambdaMode::fixed_at(lambda);
    std::vector<double> draws;
    const std::size_t chains = 100000;
    const RngStream root(6);
    for (std::size_t c = 0; c < chains; ++c) {
      RngStream rng = root.substream(c);
      ChainState s;
      s.beta = VectorXd::Constant(1, 1.0);
      s.tau2 = VectorXd::Constant(1, rng.exponential(0.5 * lambda * lambda));
      s.sigma2 = 1.0;
      s.lambda_shrink = lambda;
      for (int it = 0; it < 5; ++it) s = lasso_gibbs_step(rng, s, stats, opts);
      draws.push_back(s.beta(0));
    }
    const double ks = oracle::ks_statistic(draws, [&](double x) { return oracle::laplace_cdf(x, lambda); });
    CHECK(ks < oracle::ks_critical_1pct(chains));
  }

  TEST_CASE("pure noise intervals cover zero") {
    const Dataset d = regression(7, 100, VectorXd::Zero(10), 1.0);
    const SummaryReport rep = summarize(lasso_gibbs_run(RngStream(7), d, RunLength{4000, 1000, 1}));
    int covered = 0;
    for (const DrawSummary& c : rep.coefficients) covered += c.lower <= 0.0 && 0.0 <= c.upper;
    CHECK(covered >= 8);
  }

  TEST_CASE("hyper lambda is refreshed and determinism holds") {
    const Dataset d = regression(8, 50, sparse_ten().head(4), 1.0);
    const PosteriorSamples a = lasso_gibbs_run(RngStream(8, 2), d, RunLength{300, 0, 1});
    const PosteriorSamples b = lasso_gibbs_run(RngStream(8, 2), d, RunLength{300, 0, 1});
    CHECK(same_states(a, b));
    CHECK(a.states[10].lambda_shrink != a.states[11].lambda_shrink);
    check_positive(a);
    LassoOptions fixed;
    fixed.lambda_mode = LambdaMode::fixed_at(0.7);
    for (const ChainState& s : lasso_gibbs_run(RngStream(8), d, RunLength{50, 0, 1}, fixed).states) {
      CHECK(s.lambda_shrink == 0.7);
    }
  }
}

TEST_SUITE("horseshoe") {
  TEST_CASE("unit scales reduce to the ridge conjugate posterior") {
    const Dataset d = regression(9, 40, sparse_ten().head(3), 1.0);
    const SufficientStats stats = SufficientStats::from(d);
    ChainState init = horseshoe_gibbs_init(stats);
    init.sigma2 = 1.0;
    HorseshoeOptions opts;
    opts.freeze_scales = true;
    opts.freeze_sigma2 = true;
    const PosteriorSamples s = horseshoe_gibbs_run(RngStream(9), stats, init, RunLength{10000, 0, 1}, opts);
    const VectorXd mean = (stats.xtx + MatrixXd::Identity(3, 3)).ldlt().solve(stats.xty);
    const MatrixXd draws = s.beta_draws();
    for (Index j = 0; j < 3; ++j) {
      const auto col = column(draws, j);
      CHECK(std::abs(oracle::mean(col) - mean(j)) < 3.0 * oracle::batch_means_se(col));
    }
    for (const ChainState& st : s.states) CHECK(st.lambda2 == VectorXd::Ones(3));
  }

  TEST_CASE("determinism and positivity") {
    const Dataset d = regression(11, 50, sparse_ten(), 2.0);
    const PosteriorSamples a = horseshoe_gibbs_run(RngStream(11, 5), d, RunLength{300, 0, 1});
    const PosteriorSamples b = horseshoe_gibbs_run(RngStream(11, 5), d, RunLength{300, 0, 1});
    CHECK(same_states(a, b));
    check_positive(a);
    const PosteriorSamples c = horseshoe_gibbs_run(RngStream(11, 6), d, RunLength{300, 0, 1});
    CHECK_FALSE(same_states(a, c));
  }
}

TEST_SUITE("spike and slab") {
  TEST_CASE("p = 2 inclusion probabilities against enumeration") {
    const MatrixXd x = uniform_matrix(12, 20, 2);
    RngStream noise(12, 1);
    VectorXd y = x * Eigen::Vector2d(0.8, 0.0);
    for (Index i = 0; i < 20; ++i) y(i) += 0.7 * noise.normal();
    const SufficientStats stats = SufficientStats::from(x, y);
    SpikeSlabOptions opts;
    opts.theta = 0.4;
    opts.sigma2_slab = 1.0;
    opts.fixed_sigma2_e = 0.5;
    const PosteriorSamples s = spike_slab_gibbs_run(RngStream(12), stats, spike_slab_gibbs_init(stats, opts),
                                                    RunLength{50000, 1000, 1}, opts);
    const VectorXd expected = oracle::spike_slab_enumeration(x, y, 0.4, 1.0, 0.5);
    const VectorXd got = inclusion_probabilities(s);
    for (Index j = 0; j < 2; ++j) CHECK(std::abs(got(j) - expected(j)) < 0.03);
  }

  TEST_CASE("theta near one keeps every coefficient") {
    const Dataset d = regression(13, 60, Eigen::Vector3d(3.0, -2.0, 2.5), 0.5);
    const PosteriorSamples s = spike_slab_gibbs_run(RngStream(13), d, 0.999, 1.0, RunLength{2000, 200, 1});
    std::size_t all = 0;
    for (const ChainState& st : s.states) all += st.gamma.sum() == 3;
    CHECK(static_cast<double>(all) >= 0.99 * static_cast<double>(s.states.size()));
  }

  TEST_CASE("frozen inclusion matches the conjugate posterior mean") {
    const Dataset d = regression(14, 40, Eigen::Vector3d(1.0, 0.5, -1.0), 1.0);
    const SufficientStats stats = SufficientStats::from(d);
    SpikeSlabOptions opts;
    opts.sigma2_slab = 2.0;
    opts.fixed_sigma2_e = 0.8;
    opts.freeze_gamma = true;
    const PosteriorSamples s = spike_slab_gibbs_run(RngStream(14), stats, spike_slab_gibbs_init(stats, opts),
                                                    RunLength{10000, 500, 1}, opts);
    const MatrixXd prec = stats.xtx / 0.8 + MatrixXd::Identity(3, 3) / 2.0;
    const VectorXd mean = prec.ldlt().solve(stats.xty / 0.8);
    const MatrixXd draws = s.beta_draws();
    for (Index j = 0; j < 3; ++j) {
      const auto col = column(draws, j);
      CHECK(std::abs(oracle::mean(col) - mean(j)) < 3.0 * oracle::batch_means_se(col));
    }
  }

  TEST_CASE("validation and determinism") {
    const Dataset d = regression(15, 30, Eigen::Vector2d(1.0, 0.0), 1.0);
    CHECK_THROWS_AS((void)spike_slab_gibbs_run(RngStream(1), d, 1.0, 1.0, RunLength{100, 0, 1}), ValidationError);
    CHECK_THROWS_AS((void)spike_slab_gibbs_run(RngStream(1), d, 0.5, 0.0, RunLength{100, 0, 1}), ValidationError);
    const PosteriorSamples a = spike_slab_gibbs_run(RngStream(15), d, 0.5, 1.0, RunLength{300, 0, 1});
    const PosteriorSamples b = spike_slab_gibbs_run(RngStream(15), d, 0.5, 1.0, RunLength{300, 0, 1});
    CHECK(same_states(a, b));
    check_positive(a);
  }
}
