#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "rlab/gegenbauer.hpp"
#include "rlab/rng.hpp"
#include "rlab/targets.hpp"

using namespace rlab;

TEST_CASE("constant profile target") {
  for (int d : {2, 3}) {
    const int s = 1;
    const auto target = make_lp_target(d, s, 1.5, constant_profile(1.0), 10);
    const auto spec = funk_hecke_coeff(d, s, 10);
    CHECK(target.induced.coeffs[0] == doctest::Approx(spec.lambdas[0]).epsilon(1e-12));
    for (int i = 1; i <= 10; ++i) CHECK(std::abs(target.induced.coeffs[i]) < 1e-12);
    CHECK(target.lp_norm == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(target.discarded_mass_fraction == doctest::Approx(0.0).epsilon(1e-20));
  }
}

TEST_CASE("spectral identity f_i = lambda_i a_i on admissible modes") {
  const int d = 2, s = 1;
  const auto target = make_lp_target(d, s, 1.0, gegenbauer_profile(d, 2), 12);
  const auto spec = funk_hecke_coeff(d, s, 12);
  for (int i = 0; i <= 12; ++i) {
    CHECK(std::abs(target.induced.coeffs[i] - spec.lambdas[i] * target.density.coeffs[i]) <
          1e-10);
  }
  // the k = 2 Gegenbauer density has one admissible mode with coefficient 1/N
  const double n2 = static_cast<double>(harmonic_dim(d, 2));
  CHECK(target.density.coeffs[2] == doctest::Approx(1.0 / n2).epsilon(1e-10));
  CHECK(parseval_norm(target.induced) ==
        doctest::Approx(std::abs(spec.lambdas[2]) / std::sqrt(n2)).epsilon(1e-10));
}

TEST_CASE("parity projection records the discarded mass") {
  const int d = 2, s = 1;
  SUBCASE("fully inadmissible profile") {
    const auto target = make_lp_target(d, s, 1.0, gegenbauer_profile(d, 3), 12);
    CHECK(target.discarded_mass_fraction == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(parseval_norm(target.density) == 0.0);
  }
  SUBCASE("mixed-parity profile") {
    ZonalProfile mixed{"mixed",
                       [d](double t) {
                         return gegenbauer_eval(d, 2, t) + gegenbauer_eval(d, 3, t);
                       },
                       {}};
    const auto target = make_lp_target(d, s, 1.0, mixed, 12);
    // squared masses 1/N(2,2) kept, 1/N(2,3) dropped
    const double kept = 1.0 / 5.0, dropped = 1.0 / 7.0;
    CHECK(target.discarded_mass_fraction ==
          doctest::Approx(dropped / (kept + dropped)).epsilon(1e-9));
  }
}

TEST_CASE("near-extremal target saturates the projection exponent") {
  const int d = 2, s = 1;
  const double p = 1.0;
  const auto target = make_lp_target_near_extremal(d, s, p, 0.05, 400);
  CHECK(std::isfinite(target.lp_norm));
  CHECK(target.lp_norm > 0.0);
  const double zeta = zeta_exponent(d, p);
  for (int i : {2, 10, 100, 399}) {
    if (i % 2 == s % 2) continue;
    const double mode_l2 =
        std::sqrt(static_cast<double>(harmonic_dim(d, i))) * target.density.coeffs[i];
    CHECK(mode_l2 == doctest::Approx(std::pow(i, zeta - 0.05)).epsilon(1e-12));
  }
  // killed parity: no induced mass on inadmissible modes
  for (int i = 3; i <= 399; i += 2) CHECK(target.induced.coeffs[i] == 0.0);
}

TEST_CASE("zeta exponent branches") {
  CHECK(zeta_exponent(2, 1.0) == doctest::Approx(0.5));
  CHECK(zeta_exponent(2, 1.5) == doctest::Approx(1.0 / 12).epsilon(1e-12));
}

TEST_CASE("Lp norms are monotone in p on the probability sphere") {
  Rng rng(5);
  for (int trial = 0; trial < 5; ++trial) {
    ZonalSpectrum g;
    g.d = 3;
    g.coeffs.resize(8);
    for (double& c : g.coeffs) c = rng.normal();
    const double n1 = lp_norm_of_spectrum(g, 1.0);
    const double n15 = lp_norm_of_spectrum(g, 1.5);
    const double n2 = lp_norm_of_spectrum(g, 2.0);
    CHECK(n1 <= n15 * (1 + 1e-12));
    CHECK(n15 <= n2 * (1 + 1e-12));
  }
}

TEST_CASE("lifting and reverse map") {
  const int d = 2;
  auto f = [](const Eigen::VectorXd& x) { return x[0] - 2.0 * x[1] + x.squaredNorm(); };

  SUBCASE("order 0 lift drops the height factor") {
    auto lifted = lift_to_sphere(f, 0);
    Eigen::VectorXd u(3);
    u << 0.3, 0.4, std::sqrt(1.0 - 0.25);
    Eigen::VectorXd x = u.head(2) / u[2];
    CHECK(lifted(u) == doctest::Approx(f(x)).epsilon(1e-14));
  }

  SUBCASE("north pole maps to the origin value") {
    for (int s : {0, 1, 2}) {
      auto lifted = lift_to_sphere(f, s);
      Eigen::VectorXd pole(3);
      pole << 0.0, 0.0, 1.0;
      Eigen::VectorXd zero = Eigen::VectorXd::Zero(2);
      CHECK(lifted(pole) == doctest::Approx(f(zero)).epsilon(1e-14));
    }
  }

  SUBCASE("round trip is the identity on the ball") {
    Rng rng(11);
    for (int s : {0, 1, 2}) {
      auto lifted = lift_to_sphere(f, s);
      auto back = reverse_map(lifted, s);
      for (int i = 0; i < 100; ++i) {
        Eigen::VectorXd x(2);
        x << rng.uniform(-0.7, 0.7), rng.uniform(-0.7, 0.7);
        if (x.norm() > 1.0) continue;
        CHECK(back(x) == doctest::Approx(f(x)).epsilon(1e-12));
      }
    }
  }

  SUBCASE("reverse of constants") {
    auto one = [](const Eigen::VectorXd&) { return 1.0; };
    auto r0 = reverse_map(one, 0);
    auto r2 = reverse_map(one, 2);
    Eigen::VectorXd x(2);
    x << 0.6, -0.3;
    CHECK(r0(x) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(r2(x) == doctest::Approx(x.squaredNorm() + 1.0).epsilon(1e-14));
  }

  SUBCASE("outside the cap throws") {
    auto lifted = lift_to_sphere(f, 1);
    Eigen::VectorXd u(3);
    u << 1.0, 0.0, 0.0;
    CHECK_THROWS_AS((void)lifted(u), std::domain_error);
  }
}

TEST_CASE("barron target construction") {
  const auto t1 = make_barron_target(2, 1, 5, 42);
  CHECK(path_norm(t1.net) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(t1.barron_norm_bound == doctest::Approx(1.0).epsilon(1e-12));
  for (const Neuron& n : t1.net.neurons())
    CHECK(n.w.lpNorm<1>() == doctest::Approx(1.0).epsilon(1e-12));

  SUBCASE("deterministic given the seed") {
    const auto t2 = make_barron_target(2, 1, 5, 42);
    for (int j = 0; j < 5; ++j) {
      CHECK(t2.net.neurons()[j].a == t1.net.neurons()[j].a);
      CHECK(t2.net.neurons()[j].b == t1.net.neurons()[j].b);
      CHECK(t2.net.neurons()[j].w == t1.net.neurons()[j].w);
    }
  }
  SUBCASE("different seeds differ") {
    const auto t3 = make_barron_target(2, 1, 5, 43);
    CHECK(t3.net.neurons()[0].a != t1.net.neurons()[0].a);
  }
}

TEST_CASE("sobolev catalog gradients match finite differences") {
  Rng rng(3);
  const double h = 1e-6;
  for (const auto& target :
       {gaussian_bump(2), polynomial_bump(2), cosine_product(2, 2.5),
        affine_target(2, (Eigen::VectorXd(2) << 0.5, -1.5).finished(), 0.3)}) {
    for (int trial = 0; trial < 25; ++trial) {
      Eigen::VectorXd x(2);
      x << rng.uniform(-0.9, 0.9), rng.uniform(-0.9, 0.9);
      const Eigen::VectorXd g = target.gradient(x);
      for (int k = 0; k < 2; ++k) {
        Eigen::VectorXd xp = x, xm = x;
        xp[k] += h;
        xm[k] -= h;
        const double fd = (target.value(xp) - target.value(xm)) / (2 * h);
        CHECK(std::abs(fd - g[k]) < 1e-7 * std::max(1.0, std::abs(g[k])));
      }
    }
  }
}
