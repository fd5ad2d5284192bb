#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "rlab/ratefit.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

TEST_CASE("exact power law") {
  std::vector<double> xs, ys;
  for (double x : {1.0, 2.0, 4.0, 8.0, 16.0}) {
    xs.push_back(x);
    ys.push_back(4.0 / (x * x));
  }
  const auto fit = fit_loglog(xs, ys, 200, 1);
  CHECK(fit.slope == doctest::Approx(-2.0).epsilon(1e-12));
  CHECK(fit.intercept == doctest::Approx(std::log(4.0)).epsilon(1e-12));
  CHECK(fit.r_squared == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(fit.ci_lo <= fit.slope);
  CHECK(fit.ci_hi >= fit.slope);
  CHECK(fit.n_points == 5);
}

TEST_CASE("constant data gives slope zero") {
  std::vector<double> xs{1, 2, 3, 4}, ys{5, 5, 5, 5};
  const auto fit = fit_loglog(xs, ys, 100, 1);
  CHECK(fit.slope == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("nonpositive points are excluded and counted") {
  std::vector<double> xs{1, 2, 3, 4, 5}, ys{1.0, 0.0, 0.5, -1.0, 0.25};
  const auto fit = fit_loglog(xs, ys, 100, 1);
  CHECK(fit.excluded == 2);
  CHECK(fit.n_points == 3);

  std::vector<double> bad_y{1.0, 0.0, 0.0, 0.0};
  CHECK_THROWS_AS((void)fit_loglog(xs, bad_y, 100, 1), std::invalid_argument);
}

TEST_CASE("scale equivariance") {
  std::vector<double> xs, ys, ys_scaled;
  Rng rng(5);
  for (int i = 1; i <= 8; ++i) {
    xs.push_back(i);
    const double y = std::pow(i, -1.3) * std::exp(0.02 * rng.normal());
    ys.push_back(y);
    ys_scaled.push_back(10.0 * y);
  }
  const auto a = fit_loglog(xs, ys, 50, 2);
  const auto b = fit_loglog(xs, ys_scaled, 50, 2);
  CHECK(b.slope == doctest::Approx(a.slope).epsilon(1e-12));
  CHECK(b.intercept == doctest::Approx(a.intercept + std::log(10.0)).epsilon(1e-12));
}

TEST_CASE("bootstrap CI covers the true slope in meta-trials") {
  // slope -1.5, 1% multiplicative noise, 8 points, 100 meta-trials
  int covered = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Rng rng(1000 + trial);
    std::vector<double> xs, ys;
    for (int i = 0; i < 8; ++i) {
      const double x = std::pow(2.0, i);
      xs.push_back(x);
      ys.push_back(3.0 * std::pow(x, -1.5) * std::exp(0.01 * rng.normal()));
    }
    const auto fit = fit_loglog(xs, ys, 400, 77 + trial);
    if (fit.ci_lo <= -1.5 && -1.5 <= fit.ci_hi) ++covered;
  }
  CHECK(covered >= 90);
}
