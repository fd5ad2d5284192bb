#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rlab/mollify.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

TEST_CASE("mollifier integrates to one") {
  // constant functions are reproduced exactly by the alternating combination
  for (int d : {1, 2, 3}) {
    SobolevTarget c;
    c.name = "const";
    c.d = d;
    c.value = [](const Eigen::VectorXd&) { return 2.5; };
    c.gradient = [d](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(d); };
    for (int alpha : {1, 2, 3}) {
      const auto f_eps = mollified_approx(c, make_mollifier(d, 0.3, alpha));
      const Eigen::VectorXd x = Eigen::VectorXd::Constant(d, 0.1);
      CHECK(f_eps(x) == doctest::Approx(2.5).epsilon(1e-10));
    }
  }
}

TEST_CASE("mollifier bump shape") {
  const auto spec = make_mollifier(2, 0.5, 1);
  Eigen::VectorXd inside(2), boundary(2), outside(2);
  inside << 0.2, 0.1;
  boundary << 1.0, 0.0;
  outside << 0.9, 0.9;
  CHECK(mollifier_phi(spec, inside) > 0.0);
  CHECK(mollifier_phi(spec, boundary) == 0.0);
  CHECK(mollifier_phi(spec, outside) == 0.0);
  // radial symmetry
  Eigen::VectorXd rotated(2);
  rotated << 0.1, 0.2;
  CHECK(mollifier_phi(spec, inside) == doctest::Approx(mollifier_phi(spec, rotated)));
}

TEST_CASE("affine functions are reproduced exactly at alpha = 1") {
  // the radial mollifier kills odd moments
  const auto target = affine_target(2, (Eigen::VectorXd(2) << 1.5, -0.7).finished(), 0.3);
  const auto f_eps = mollified_approx(target, make_mollifier(2, 0.25, 1));
  Rng rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    Eigen::VectorXd x(2);
    x << rng.uniform(-1, 1), rng.uniform(-1, 1);
    CHECK(std::abs(f_eps(x) - target.value(x)) < 1e-8);
  }
}

TEST_CASE("finite differences") {
  auto f = [](const Eigen::VectorXd& x) { return std::exp(-x.squaredNorm()); };
  Eigen::VectorXd y(2);
  y << 0.1, -0.2;

  SUBCASE("alpha = 1 is the plain difference") {
    auto diff = finite_difference(f, y, 1);
    Eigen::VectorXd x(2);
    x << 0.3, 0.4;
    CHECK(diff(x) == doctest::Approx(f(x) - f(x - y)).epsilon(1e-15));
  }

  SUBCASE("constants are annihilated for every order") {
    auto c = [](const Eigen::VectorXd&) { return 7.0; };
    for (int alpha : {1, 2, 3, 4}) {
      auto diff = finite_difference(c, y, alpha);
      CHECK(std::abs(diff(y)) < 1e-12);
    }
  }

  SUBCASE("grid max scales like ||y||^alpha") {
    for (int alpha : {1, 2}) {
      std::vector<double> hs{0.2, 0.1, 0.05, 0.025};
      std::vector<double> maxima;
      for (double h : hs) {
        Eigen::VectorXd dir(2);
        dir << h, 0.5 * h;
        auto diff = finite_difference(f, dir, alpha);
        double worst = 0.0;
        for (int i = -10; i <= 10; ++i) {
          for (int j = -10; j <= 10; ++j) {
            Eigen::VectorXd x(2);
            x << 0.1 * i, 0.1 * j;
            worst = std::max(worst, std::abs(diff(x)));
          }
        }
        maxima.push_back(worst);
      }
      // two-point log-log slope across the sweep
      const double slope = std::log(maxima.front() / maxima.back()) /
                           std::log(hs.front() / hs.back());
      CHECK(std::abs(slope - alpha) < 0.2);
    }
  }

  SUBCASE("commutes with translation of the argument") {
    Eigen::VectorXd shift(2);
    shift << 0.4, -0.1;
    auto shifted = [&](const Eigen::VectorXd& x) { return f(x + shift); };
    auto d1 = finite_difference(f, y, 2);
    auto d2 = finite_difference(shifted, y, 2);
    Eigen::VectorXd x(2);
    x << 0.2, 0.3;
    CHECK(d2(x) == doctest::Approx(d1(x + shift)).epsilon(1e-15));
  }
}

TEST_CASE("sobol sequence opening points and equidistribution") {
  SobolSequence seq(2);
  const Eigen::VectorXd p1 = seq.next();
  CHECK(p1[0] == 0.5);
  CHECK(p1[1] == 0.5);
  const Eigen::VectorXd p2 = seq.next();
  CHECK(p2[0] == 0.75);
  CHECK(p2[1] == 0.25);
  const Eigen::VectorXd p3 = seq.next();
  CHECK(p3[0] == 0.25);
  CHECK(p3[1] == 0.75);

  SobolSequence seq6(6);
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(6);
  const int n = 4096;
  for (int i = 0; i < n; ++i) mean += seq6.next();
  mean /= n;
  for (int k = 0; k < 6; ++k) CHECK(std::abs(mean[k] - 0.5) < 0.005);
}

TEST_CASE("high-dimensional mollification runs on the QMC path") {
  SobolevTarget c;
  c.name = "const4";
  c.d = 4;
  c.value = [](const Eigen::VectorXd&) { return 1.0; };
  c.gradient = [](const Eigen::VectorXd&) { return Eigen::VectorXd::Zero(4); };
  const auto f_eps = mollified_approx(c, make_mollifier(4, 0.3, 1));
  CHECK(f_eps.qmc_error_estimate() < 0.02);
  CHECK(f_eps(Eigen::VectorXd::Zero(4)) == doctest::Approx(1.0).epsilon(0.02));
}
