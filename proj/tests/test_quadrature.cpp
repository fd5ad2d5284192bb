#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "rlab/quadrature.hpp"
#include "rlab/rng.hpp"

using namespace rlab;

TEST_CASE("Gauss-Legendre integrates smooth functions") {
  const QuadratureRule& rule = gauss_legendre(16);
  double acc = 0.0;
  for (int i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * std::cos(rule.nodes[i]);
  CHECK(acc == doctest::Approx(2.0 * std::sin(1.0)).epsilon(1e-14));
}

TEST_CASE("rule weights sum to the weight-function mass") {
  CHECK(gauss_legendre(8).weights.sum() == doctest::Approx(2.0).epsilon(1e-14));
  // int (1-t^2)^(1/2) dt = pi/2
  CHECK(gauss_jacobi(0.5, 0.5, 12).weights.sum() == doctest::Approx(M_PI / 2).epsilon(1e-14));
  // int (1-t)^2 dt = 8/3
  CHECK(gauss_jacobi(2.0, 0.0, 6).weights.sum() == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("rules are exact on polynomials of degree 2n-1") {
  const int n = 7;
  const QuadratureRule& rule = gauss_jacobi(1.5, 0.5, n);
  // monomial moments against (1-t)^(3/2) (1+t)^(1/2), checked vs a dense rule
  const QuadratureRule& dense = gauss_jacobi(1.5, 0.5, 64);
  for (int p = 0; p <= 2 * n - 1; ++p) {
    double lhs = 0.0, rhs = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) lhs += rule.weights[i] * std::pow(rule.nodes[i], p);
    for (int i = 0; i < dense.nodes.size(); ++i)
      rhs += dense.weights[i] * std::pow(dense.nodes[i], p);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
  }
}

TEST_CASE("adaptive integration converges for analytic integrands") {
  const double got = integrate_jacobi([](double t) { return std::exp(t); }, 0.0, 0.0);
  CHECK(got == doctest::Approx(std::exp(1.0) - std::exp(-1.0)).epsilon(1e-13));
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(1) == doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_area(2) == doctest::Approx(4.0 * M_PI).epsilon(1e-14));
  CHECK(sphere_area(3) == doctest::Approx(2.0 * M_PI * M_PI).epsilon(1e-14));
}

TEST_CASE("sphere_area(3) cross-checked by Monte Carlo ball volume") {
  // vol(B^4) = omega_3 / 4; estimate the volume fraction of the unit ball in
  // the 4-cube.
  Rng rng(424242);
  const int n = 2000000;
  int inside = 0;
  for (int i = 0; i < n; ++i) {
    double r2 = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double c = rng.uniform(-1.0, 1.0);
      r2 += c * c;
    }
    if (r2 <= 1.0) ++inside;
  }
  const double vol = 16.0 * static_cast<double>(inside) / n;
  CHECK(4.0 * vol == doctest::Approx(sphere_area(3)).epsilon(0.01));
}

TEST_CASE("rule cache is stable under concurrent readers") {
  const QuadratureRule* first = &gauss_jacobi(0.5, 0.5, 333);
  std::vector<std::thread> workers;
  std::vector<const QuadratureRule*> seen(8, nullptr);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([t, &seen] { seen[t] = &gauss_jacobi(0.5, 0.5, 333); });
  for (auto& w : workers) w.join();
  for (const auto* ptr : seen) CHECK(ptr == first);
}
