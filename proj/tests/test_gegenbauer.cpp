#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rlab/funk_hecke.hpp"
#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"

using namespace rlab;

TEST_CASE("harmonic space dimensions") {
  CHECK(harmonic_dim(2, 0) == 1);
  CHECK(harmonic_dim(3, 0) == 1);
  CHECK(harmonic_dim(2, 3) == 7);  // 2i+1 on S^2
  CHECK(harmonic_dim(3, 1) == 4);  // (i+1)^2 on S^3
  for (int i = 1; i <= 12; ++i) CHECK(harmonic_dim(3, i) == static_cast<std::uint64_t>((i + 1) * (i + 1)));
}

TEST_CASE("harmonic_dim agrees with the (2i+d-1)/i binomial form") {
  for (int d : {2, 3, 5, 10}) {
    for (int i = 1; i <= 40; ++i) {
      double binom = 1.0;
      for (int k = 1; k <= d - 1; ++k) binom = binom * (i + d - 2 - (d - 1) + k) / k;
      const double expected = (2.0 * i + d - 1.0) / i * binom;
      CHECK(static_cast<double>(harmonic_dim(d, i)) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("gegenbauer endpoint and low-degree closed forms") {
  for (int d : {2, 3, 5}) {
    for (double t : {-0.8, -0.3, 0.0, 0.4, 0.9}) CHECK(gegenbauer_eval(d, 1, t) == doctest::Approx(t));
    for (int i = 0; i <= 50; ++i) CHECK(gegenbauer_eval(d, i, 1.0) == doctest::Approx(1.0).epsilon(1e-12));
  }
  // Rodrigues-form oracles at small degree: Legendre on S^2, Chebyshev-U ratio on S^3.
  CHECK(gegenbauer_eval(2, 2, 0.5) == doctest::Approx(-0.125));
  CHECK(gegenbauer_eval(2, 3, 0.7) == doctest::Approx((5 * 0.343 - 3 * 0.7) / 2).epsilon(1e-14));
  CHECK(gegenbauer_eval(3, 2, 0.6) == doctest::Approx((4 * 0.36 - 1) / 3).epsilon(1e-14));

  CHECK_THROWS_AS((void)gegenbauer_eval(2, 2, 1.5), std::domain_error);
}

TEST_CASE("sup norm bound on a dense grid") {
  for (int d : {2, 3, 5}) {
    for (int i : {1, 2, 5, 13, 27, 50}) {
      double worst = 0.0;
      for (int k = 0; k <= 10000; ++k) {
        const double t = -1.0 + 2.0 * k / 10000.0;
        worst = std::max(worst, std::abs(gegenbauer_eval(d, i, t)));
      }
      CHECK(worst <= 1.0 + 1e-12);
    }
  }
}

TEST_CASE("orthogonality under the Gegenbauer weight") {
  for (int d : {2, 3, 5}) {
    const double a = 0.5 * (d - 2);
    const QuadratureRule& rule = gauss_jacobi(a, a, 64);
    const double ratio = sphere_area_ratio(d);
    const int maxdeg = 30;

    // table of P_i at the nodes
    std::vector<Eigen::ArrayXd> values;
    GegenbauerScan scan(d, rule.nodes);
    values.push_back(scan.values());
    for (int i = 1; i <= maxdeg; ++i) {
      scan.advance();
      values.push_back(scan.values());
    }

    for (int i = 0; i <= maxdeg; ++i) {
      for (int j = i; j <= maxdeg; ++j) {
        const double integral = ratio * (rule.weights * values[i] * values[j]).sum();
        const double expected = (i == j) ? 1.0 / static_cast<double>(harmonic_dim(d, i)) : 0.0;
        CHECK(std::abs(integral - expected) < 1e-9);
      }
    }
  }
}

TEST_CASE("1 - P_i(cos beta) tracks min(1, i^2 beta^2) up to constants") {
  for (int d : {2, 3}) {
    for (int i = 5; i <= 100; ++i) {
      const double beta = 1.0 / i;
      const double gap = 1.0 - gegenbauer_eval(d, i, std::cos(beta));
      const double ref = std::min(1.0, static_cast<double>(i) * i * beta * beta);
      const double r = gap / ref;
      CHECK(r > 0.05);
      CHECK(r < 5.0);
    }
  }
}

TEST_CASE("scan matches single evaluations") {
  Eigen::ArrayXd pts(3);
  pts << -0.9, 0.1, 0.77;
  GegenbauerScan scan(4, pts);
  for (int i = 0; i <= 25; ++i) {
    for (int k = 0; k < 3; ++k)
      CHECK(scan.values()[k] == doctest::Approx(gegenbauer_eval(4, i, pts[k])).epsilon(1e-14));
    scan.advance();
  }
}
