#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "rlab/funk_hecke.hpp"
#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"
#include "rlab/rng.hpp"
#include "rlab/zonal.hpp"

using namespace rlab;

namespace {

ZonalSpectrum single_mode(int d, int k, double value, int maxdeg) {
  ZonalSpectrum g;
  g.d = d;
  g.coeffs.assign(maxdeg + 1, 0.0);
  g.coeffs[k] = value;
  return g;
}

ZonalSpectrum random_spectrum(int d, int maxdeg, std::uint64_t seed) {
  Rng rng(seed);
  ZonalSpectrum g;
  g.d = d;
  g.coeffs.resize(maxdeg + 1);
  for (double& c : g.coeffs) c = rng.normal() / 4.0;
  return g;
}

// Direct product-quadrature evaluation of u -> int_{S^2} a(theta) sigma_s(theta.u) dtau_2
// at u = (sin psi, 0, cos psi); Gauss-Legendre in cos(theta_polar), periodic
// trapezoid in azimuth.
double s2_operator_direct(const ZonalSpectrum& density, int s, double cos_psi) {
  const double sin_psi = std::sqrt(std::max(0.0, 1.0 - cos_psi * cos_psi));
  const QuadratureRule& rule = gauss_legendre(200);
  const int n_phi = 256;
  double acc = 0.0;
  for (int k = 0; k < rule.nodes.size(); ++k) {
    const double c = rule.nodes[k];
    const double sc = std::sqrt(std::max(0.0, 1.0 - c * c));
    const double a_val = eval_zonal(density, c);
    double inner = 0.0;
    for (int l = 0; l < n_phi; ++l) {
      const double phi = 2.0 * M_PI * l / n_phi;
      const double dot = sc * std::cos(phi) * sin_psi + c * cos_psi;
      double sig;
      if (s == 0)
        sig = dot >= 0.0 ? 1.0 : 0.0;
      else
        sig = std::pow(std::max(0.0, dot), s);
      inner += sig;
    }
    acc += rule.weights[k] * a_val * inner / n_phi;
  }
  // dtau_2 normalizes the surface measure; the polar weight integrates to 2
  // and the azimuth average is already taken.
  return acc / 2.0;
}

}  // namespace

TEST_CASE("parseval norm on single modes and the zero spectrum") {
  for (int d : {2, 3, 5}) {
    for (int k : {0, 1, 4}) {
      const auto g = single_mode(d, k, 1.0, 8);
      CHECK(parseval_norm(g) ==
            doctest::Approx(std::sqrt(static_cast<double>(harmonic_dim(d, k)))).epsilon(1e-14));
    }
  }
  CHECK(parseval_norm(single_mode(2, 0, 0.0, 5)) == 0.0);
}

TEST_CASE("parseval norm agrees with direct quadrature of the synthesized function") {
  for (int d : {2, 3}) {
    const auto g = random_spectrum(d, 40, 17 + d);
    const double spectral = parseval_norm(g);
    const double direct = quadrature_l2_norm(g);
    CHECK(spectral == doctest::Approx(direct).epsilon(1e-8));
  }
}

TEST_CASE("f2 norm: admissible single modes and parity-killed mass") {
  const auto spec = funk_hecke_coeff(2, 1, 12);
  // unit-L2 mass on mode 2: coefficient 1/sqrt(N)
  const double n2 = static_cast<double>(harmonic_dim(2, 2));
  auto g = single_mode(2, 2, 1.0 / std::sqrt(n2), 12);
  CHECK(f2_norm(spec, g) == doctest::Approx(1.0 / spec.lambdas[2]).epsilon(1e-12));

  auto bad = single_mode(2, 3, 0.5, 12);  // odd mode, killed for s = 1
  CHECK(f2_norm(spec, bad) == std::numeric_limits<double>::infinity());

  SUBCASE("two admissible modes combine in quadrature") {
    ZonalSpectrum two = single_mode(2, 2, 1.0 / std::sqrt(n2), 12);
    const double n4 = static_cast<double>(harmonic_dim(2, 4));
    two.coeffs[4] = 1.0 / std::sqrt(n4);
    const double expect = std::sqrt(1.0 / (spec.lambdas[2] * spec.lambdas[2]) +
                                    1.0 / (spec.lambdas[4] * spec.lambdas[4]));
    CHECK(f2_norm(spec, two) == doctest::Approx(expect).epsilon(1e-12));
  }
}

TEST_CASE("apply_funk_hecke multiplies mode-wise") {
  const auto spec = funk_hecke_coeff(3, 1, 10);
  auto g = single_mode(3, 0, 1.0, 10);
  const auto out = apply_funk_hecke(spec, g);
  CHECK(out.coeffs[0] == doctest::Approx(spec.lambdas[0]).epsilon(1e-14));
  for (int i = 1; i <= 10; ++i) CHECK(out.coeffs[i] == 0.0);

  auto odd = single_mode(3, 3, 2.0, 10);  // killed parity for s = 1: odd modes >= 3
  const auto killed = apply_funk_hecke(spec, odd);
  CHECK(killed.coeffs[3] == 0.0);
}

TEST_CASE("Funk-Hecke diagonalization matches direct sphere quadrature on S^2") {
  const int s = 1;
  const auto spec = funk_hecke_coeff(2, s, 8);
  ZonalSpectrum density = single_mode(2, 0, 1.0, 8);
  density.coeffs[2] = 0.35;  // admissible modes for s = 1: 0 and even
  const auto product = apply_funk_hecke(spec, density);

  for (double cos_psi : {-0.7, -0.2, 0.0, 0.4, 0.85}) {
    const double direct = s2_operator_direct(density, s, cos_psi);
    const double spectral = eval_zonal(product, cos_psi);
    CHECK(spectral == doctest::Approx(direct).epsilon(1e-4));
  }
}

TEST_CASE("cutoff eta") {
  CHECK(cutoff_eta(0.0) == 1.0);
  CHECK(cutoff_eta(0.7) == 1.0);
  CHECK(cutoff_eta(1.0) == 1.0);
  CHECK(cutoff_eta(2.0) == 0.0);
  CHECK(cutoff_eta(2.5) == 0.0);
  CHECK(cutoff_eta(1.5) == doctest::Approx(0.5).epsilon(1e-14));
  double prev = 1.0;
  for (int k = 0; k <= 100; ++k) {
    const double v = cutoff_eta(3.0 * k / 100.0);
    CHECK(v <= prev + 1e-15);
    CHECK(v >= 0.0);
    CHECK(v <= 1.0);
    prev = v;
  }
}

TEST_CASE("filtered approximant windows the spectrum") {
  const auto g = random_spectrum(2, 40, 5);
  SUBCASE("band-limited inputs pass through at large j") {
    const auto out = filtered_approx(g, 40);
    for (int i = 0; i <= 40; ++i) CHECK(out.coeffs[i] == g.coeffs[i]);
  }
  SUBCASE("mode 2j is exactly zero, low modes untouched") {
    const auto out = filtered_approx(g, 12);
    CHECK(out.coeffs[24] == 0.0);
    for (int i = 0; i <= 12; ++i) CHECK(out.coeffs[i] == g.coeffs[i]);
  }
  SUBCASE("approximation error is nonincreasing in j") {
    double prev_err = std::numeric_limits<double>::infinity();
    for (int j = 1; j <= 25; ++j) {
      const auto out = filtered_approx(g, j);
      ZonalSpectrum diff = g;
      for (int i = 0; i <= g.maxdeg(); ++i) diff.coeffs[i] -= out.coeffs[i];
      const double err = parseval_norm(diff);
      CHECK(err <= prev_err + 1e-13);
      prev_err = err;
    }
  }
}

TEST_CASE("Laplace-Beltrami multiplier") {
  const auto g = random_spectrum(3, 12, 77);
  const auto same = laplace_multiplier(g, 0.0);
  for (int i = 0; i <= 12; ++i) CHECK(same.coeffs[i] == g.coeffs[i]);

  const auto lap = laplace_multiplier(g, 2.0);
  CHECK(lap.coeffs[0] == 0.0);
  for (int i = 1; i <= 12; ++i)
    CHECK(lap.coeffs[i] == doctest::Approx(i * (i + 2.0) * g.coeffs[i]).epsilon(1e-14));

  const auto back = laplace_multiplier(lap, -2.0);
  for (int i = 1; i <= 12; ++i)
    CHECK(back.coeffs[i] == doctest::Approx(g.coeffs[i]).epsilon(1e-14));
}

TEST_CASE("spherical difference norm and modulus of smoothness") {
  const int d = 2;
  SUBCASE("single-mode identity") {
    for (int k : {1, 3, 7}) {
      const auto g = single_mode(d, k, 1.0, 10);
      const double beta = 0.3;
      const double gap = 1.0 - gegenbauer_eval(d, k, std::cos(beta));
      const double expect =
          std::pow(gap, 0.5) * std::sqrt(static_cast<double>(harmonic_dim(d, k)));
      CHECK(difference_norm(g, 1.0, beta) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
  SUBCASE("order-2 difference equals the (I - T_beta) multiplier exactly") {
    const auto g = random_spectrum(d, 20, 9);
    const double beta = 0.45;
    const auto shifted = translate(g, beta);
    ZonalSpectrum diff = g;
    for (int i = 0; i <= 20; ++i) diff.coeffs[i] -= shifted.coeffs[i];
    CHECK(difference_norm(g, 2.0, beta) == doctest::Approx(parseval_norm(diff)).epsilon(1e-12));
  }
  SUBCASE("vanishes as beta -> 0 for band-limited spectra") {
    auto g = random_spectrum(d, 10, 4);
    const double norm = parseval_norm(g);
    for (double& c : g.coeffs) c /= norm;
    CHECK(difference_norm(g, 2.0, 1e-4) < 1e-6);
    CHECK(difference_norm(g, 2.0, 1e-4) > 0.0);
  }
  SUBCASE("monotone in beta on (0, pi/2] for a low single mode") {
    // grid-scan oracle; holds for k <= 2 where P_k is monotone on [0, 1]
    const auto g = single_mode(d, 2, 1.0, 8);
    double prev = 0.0;
    for (int k = 1; k <= 40; ++k) {
      const double beta = 0.5 * M_PI * k / 40.0;
      const double v = difference_norm(g, 1.0, beta);
      CHECK(v >= prev - 1e-12);
      prev = v;
    }
    CHECK(modulus_smoothness(g, 1.0, 0.5 * M_PI) == doctest::Approx(prev).epsilon(1e-12));
  }
  SUBCASE("modulus dominates the single-angle difference norm") {
    const auto g = random_spectrum(d, 20, 31);
    for (double t : {0.2, 0.7, 1.4}) {
      CHECK(modulus_smoothness(g, 2.0, t) >= difference_norm(g, 2.0, t) - 1e-12);
    }
  }
}
