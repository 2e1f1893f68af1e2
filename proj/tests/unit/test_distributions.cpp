#include <doctest.h>

#include "oracles.hpp"

#include <bayesreg/distributions.hpp>
#include <bayesreg/rng.hpp>

#include <cmath>

using namespace bayesreg;

namespace {

std::vector<double> draw_ig(std::uint64_t seed, double mu, double lam, std::size_t n) {
  RngStream rng(seed);
  std::vector<double> out(n);
  for (auto& v : out) v = sample_inverse_gaussian(rng, mu, lam);
  return out;
}

}  // namespace

TEST_SUITE("rng") {
  TEST_CASE("identical pairs reproduce, distinct pairs differ") {
    RngStream a(42, 3), b(42, 3), c(42, 4), d(43, 3);
    for (int i = 0; i < 100; ++i) {
      const double va = a.uniform();
      CHECK(va == b.uniform());
      CHECK(va != c.uniform());
      CHECK(va != d.uniform());
    }
  }

  TEST_CASE("substreams ignore parent position") {
    RngStream a(5), b(5);
    for (int i = 0; i < 17; ++i) (void)a.normal();
    RngStream sa = a.substream(9), sb = b.substream(9);
    for (int i = 0; i < 10; ++i) CHECK(sa.normal() == sb.normal());
  }

  TEST_CASE("uniform stays inside the open interval") {
    RngStream rng(1);
    for (int i = 0; i < 100000; ++i) {
      const double u = rng.uniform();
      CHECK_UNARY(u > 0.0 && u < 1.0);
    }
  }

  TEST_CASE("gamma moments") {
    RngStream rng(2);
    std::vector<double> x(100000);
    for (auto& v : x) v = rng.gamma(2.5, 4.0);
    const double se = std::sqrt(2.5 / 16.0 / 100000.0);
    CHECK(std::abs(oracle::mean(x) - 2.5 / 4.0) < 3.0 * se);
  }
}

TEST_SUITE("inverse gaussian") {
  TEST_CASE("concentrates as the shape grows") {
    const auto x = draw_ig(3, 1.0, 1e6, 10000);
    CHECK(std::sqrt(oracle::variance(x)) < 0.01);
  }

  TEST_CASE("moments mu=1 lam=1") {
    const auto x = draw_ig(4, 1.0, 1.0, 100000);
    const double n = 100000.0;
    // var = mu^3/lam = 1, fourth central moment 15 mu^7/lam^3 + 3 var^2
    CHECK(std::abs(oracle::mean(x) - 1.0) < 3.0 * std::sqrt(1.0 / n));
    const double var_se = std::sqrt((15.0 + 3.0 - 1.0) / n);
    CHECK(std::abs(oracle::variance(x) - 1.0) < 3.0 * var_se);
  }

  TEST_CASE("moments mu=2 lam=4") {
    const auto x = draw_ig(5, 2.0, 4.0, 100000);
    const double n = 100000.0;
    const double var = 8.0 / 4.0;
    CHECK(std::abs(oracle::mean(x) - 2.0) < 3.0 * std::sqrt(var / n));
    const double mu4 = 15.0 * std::pow(2.0, 7) / std::pow(4.0, 3) + 3.0 * var * var;
    CHECK(std::abs(oracle::variance(x) - var) < 3.0 * std::sqrt((mu4 - var * var) / n));
  }

  TEST_CASE("extreme means stay positive and finite") {
    RngStream rng(6);
    for (double mu : {1e-12, 1e-3, 1e6, 1e12}) {
      for (int i = 0; i < 1000; ++i) {
        const double v = sample_inverse_gaussian(rng, mu, 1.0);
        CHECK_UNARY(v > 0.0 && std::isfinite(v));
      }
    }
  }

  TEST_CASE("pdf matches the reference formula") {
    for (double x : {0.1, 0.7, 2.0, 5.0}) {
      CHECK(inverse_gaussian_pdf(x, 1.5, 2.0) == doctest::Approx(oracle::inverse_gaussian_pdf(x, 1.5, 2.0)));
    }
  }
}

TEST_SUITE("inverse gamma") {
  TEST_CASE("mean for shape 3 rate 2") {
    RngStream rng(7);
    std::vector<double> x(100000);
    for (auto& v : x) v = sample_inverse_gamma(rng, 3.0, 2.0);
    // variance rate^2 / ((a-1)^2 (a-2)) = 1
    CHECK(std::abs(oracle::mean(x) - 1.0) < 3.0 * std::sqrt(1.0 / 100000.0));
  }

  TEST_CASE("small shape draws are positive") {
    RngStream rng(8);
    for (int i = 0; i < 100000; ++i) CHECK(sample_inverse_gamma(rng, 0.5, 0.5) > 0.0);
  }

  TEST_CASE("fixed seed reproduces the sequence") {
    RngStream a(9), b(9);
    for (int i = 0; i < 1000; ++i) CHECK(sample_inverse_gamma(a, 2.0, 1.0) == sample_inverse_gamma(b, 2.0, 1.0));
  }

  TEST_CASE("pdf matches the reference formula") {
    for (double x : {0.1, 0.7, 2.0, 5.0}) {
      CHECK(inverse_gamma_pdf(x, 2.5, 1.5) == doctest::Approx(oracle::inverse_gamma_pdf(x, 2.5, 1.5)));
    }
  }
}
