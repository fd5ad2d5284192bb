#include "rlab/zonal.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"

namespace rlab {

namespace {

void check_alignment(const FunkHeckeSpectrum& spec, const ZonalSpectrum& g) {
  if (spec.d != g.d) throw std::invalid_argument("zonal: sphere dimension mismatch");
  if (spec.maxdeg() < g.maxdeg())
    throw std::invalid_argument("zonal: multiplier table shorter than spectrum");
}

}  // namespace

double parseval_norm(const ZonalSpectrum& g) {
  double acc = 0.0;
  for (int i = 0; i <= g.maxdeg(); ++i) {
    const double n = static_cast<double>(harmonic_dim(g.d, i));
    acc += n * g.coeffs[i] * g.coeffs[i];
  }
  return std::sqrt(acc);
}

double f2_norm(const FunkHeckeSpectrum& spec, const ZonalSpectrum& g) {
  check_alignment(spec, g);
  double acc = 0.0;
  for (int i = 0; i <= g.maxdeg(); ++i) {
    if (g.coeffs[i] == 0.0) continue;
    const double lam = spec.lambdas[i];
    if (lam == 0.0) return std::numeric_limits<double>::infinity();
    const double n = static_cast<double>(harmonic_dim(g.d, i));
    acc += n * g.coeffs[i] * g.coeffs[i] / (lam * lam);
  }
  return std::sqrt(acc);
}

ZonalSpectrum apply_funk_hecke(const FunkHeckeSpectrum& spec, const ZonalSpectrum& a) {
  check_alignment(spec, a);
  ZonalSpectrum out;
  out.d = a.d;
  out.coeffs.resize(a.coeffs.size());
  for (int i = 0; i <= a.maxdeg(); ++i) out.coeffs[i] = spec.lambdas[i] * a.coeffs[i];
  return out;
}

double cutoff_eta(double t) {
  if (t < 0.0) throw std::invalid_argument("cutoff_eta: requires t >= 0");
  if (t <= 1.0) return 1.0;
  if (t >= 2.0) return 0.0;
  const auto psi = [](double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; };
  const double up = psi(2.0 - t);
  return up / (up + psi(t - 1.0));
}

ZonalSpectrum filtered_approx(const ZonalSpectrum& g, int j) {
  if (j < 1) throw std::invalid_argument("filtered_approx: requires j >= 1");
  ZonalSpectrum out;
  out.d = g.d;
  out.coeffs.resize(g.coeffs.size());
  for (int i = 0; i <= g.maxdeg(); ++i)
    out.coeffs[i] = cutoff_eta(static_cast<double>(i) / j) * g.coeffs[i];
  return out;
}

ZonalSpectrum laplace_multiplier(const ZonalSpectrum& g, double alpha) {
  ZonalSpectrum out;
  out.d = g.d;
  out.coeffs.resize(g.coeffs.size());
  for (int i = 0; i <= g.maxdeg(); ++i) {
    if (alpha == 0.0) {
      out.coeffs[i] = g.coeffs[i];
    } else if (i == 0) {
      out.coeffs[i] = 0.0;
    } else {
      const double eig = static_cast<double>(i) * (i + g.d - 1.0);
      out.coeffs[i] = std::pow(eig, 0.5 * alpha) * g.coeffs[i];
    }
  }
  return out;
}

ZonalSpectrum translate(const ZonalSpectrum& g, double beta) {
  if (!(beta >= 0.0 && beta <= M_PI))
    throw std::invalid_argument("translate: requires beta in [0, pi]");
  const double c = std::cos(beta);
  ZonalSpectrum out;
  out.d = g.d;
  out.coeffs.resize(g.coeffs.size());
  for (int i = 0; i <= g.maxdeg(); ++i)
    out.coeffs[i] = gegenbauer_eval(g.d, i, c) * g.coeffs[i];
  return out;
}

double difference_norm(const ZonalSpectrum& g, double alpha, double beta) {
  if (!(beta > 0.0 && beta < M_PI))
    throw std::invalid_argument("difference_norm: requires beta in (0, pi)");
  if (!(alpha > 0.0)) throw std::invalid_argument("difference_norm: requires alpha > 0");
  const double c = std::cos(beta);
  double acc = 0.0;
  for (int i = 0; i <= g.maxdeg(); ++i) {
    if (g.coeffs[i] == 0.0) continue;
    const double gap = 1.0 - gegenbauer_eval(g.d, i, c);
    const double n = static_cast<double>(harmonic_dim(g.d, i));
    acc += std::pow(gap, alpha) * n * g.coeffs[i] * g.coeffs[i];
  }
  return std::sqrt(acc);
}

double modulus_smoothness(const ZonalSpectrum& g, double alpha, double t) {
  if (!(t > 0.0 && t < M_PI))
    throw std::invalid_argument("modulus_smoothness: requires t in (0, pi)");
  constexpr int kGrid = 64;
  double best = 0.0;
  for (int k = 0; k < kGrid; ++k) {
    // log-spaced on (t/100, t], largest point exactly t
    const double beta = t * std::pow(100.0, -(1.0 - static_cast<double>(k) / (kGrid - 1)));
    best = std::max(best, difference_norm(g, alpha, beta));
  }
  return best;
}

double eval_zonal(const ZonalSpectrum& g, double t) {
  Eigen::ArrayXd point(1);
  point[0] = t;
  return eval_zonal(g, point)[0];
}

Eigen::ArrayXd eval_zonal(const ZonalSpectrum& g, const Eigen::ArrayXd& ts) {
  GegenbauerScan scan(g.d, ts);
  Eigen::ArrayXd acc = Eigen::ArrayXd::Constant(ts.size(), g.coeffs[0]);
  for (int i = 1; i <= g.maxdeg(); ++i) {
    scan.advance();
    if (g.coeffs[i] == 0.0) continue;
    acc += g.coeffs[i] * static_cast<double>(harmonic_dim(g.d, i)) * scan.values();
  }
  return acc;
}

double lp_norm_of_spectrum(const ZonalSpectrum& g, double p) {
  const double a = 0.5 * (g.d - 2);
  auto estimate = [&](int order) {
    const QuadratureRule& rule = gauss_jacobi(a, a, order);
    const Eigen::ArrayXd h = eval_zonal(g, rule.nodes);
    return (rule.weights * h.abs().pow(p)).sum() * sphere_area_ratio(g.d);
  };
  const int n0 = std::max(256, g.maxdeg() + 16);
  const double coarse = estimate(n0);
  const double fine = estimate(2 * n0);
  if (std::abs(fine - coarse) > std::max(1e-10, 1e-8 * std::abs(fine)))
    throw QuadratureError("lp_norm_of_spectrum: quadrature disagreement");
  return std::pow(fine, 1.0 / p);
}

double quadrature_l2_norm(const ZonalSpectrum& g) {
  const double a = 0.5 * (g.d - 2);
  const int order = std::max(128, g.maxdeg() + 16);
  const QuadratureRule& rule = gauss_jacobi(a, a, order);
  Eigen::ArrayXd t = rule.nodes;
  Eigen::ArrayXd h = Eigen::ArrayXd::Constant(t.size(), g.coeffs[0]);
  GegenbauerScan scan(g.d, t);
  for (int i = 1; i <= g.maxdeg(); ++i) {
    scan.advance();
    h += g.coeffs[i] * static_cast<double>(harmonic_dim(g.d, i)) * scan.values();
  }
  const double integral = (rule.weights * h * h).sum() * sphere_area_ratio(g.d);
  return std::sqrt(integral);
}

}  // namespace rlab
