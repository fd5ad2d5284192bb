#include "rlab/targets.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"
#include "rlab/rng.hpp"

namespace rlab {

namespace {

// L^p(tau_d) norm of a zonal profile by Gauss-Jacobi quadrature. |h|^p keeps
// kinks wherever h crosses zero, so the caller's split points are honored and
// the adaptive ladder does the rest.
double profile_lp_norm(const std::function<double(double)>& h, int d, double p,
                       const std::vector<double>& kinks) {
  const double a = 0.5 * (d - 2);
  const double ratio = sphere_area_ratio(d);
  auto integrand = [&](double t) { return std::pow(std::abs(h(t)), p); };
  double acc = 0.0;
  std::vector<double> cuts = kinks;
  std::sort(cuts.begin(), cuts.end());
  double lo = -1.0;
  cuts.push_back(1.0);
  for (double hi : cuts) {
    if (hi <= lo) continue;
    const double half = 0.5 * (hi - lo);
    const double mid = 0.5 * (hi + lo);
    const bool at_right = hi >= 1.0;
    const bool at_left = lo <= -1.0;
    acc += integrate_jacobi(
        [&](double u) {
          const double t = std::clamp(mid + half * u, -1.0, 1.0);
          double w = half;
          if (at_right)
            w *= std::pow(half, a);
          else if (a != 0.0)
            w *= std::pow(1.0 - t, a);
          if (at_left)
            w *= std::pow(half, a);
          else if (a != 0.0)
            w *= std::pow(1.0 + t, a);
          return integrand(t) * w;
        },
        at_right ? a : 0.0, at_left ? a : 0.0, 1e-13, 1e-11, 1e-8);
    lo = hi;
  }
  const double value = ratio * acc;
  if (!(value >= 0.0) || !std::isfinite(value))
    throw QuadratureError("make_lp_target: profile is not p-integrable");
  return std::pow(value, 1.0 / p);
}

LpTypeTarget assemble_target(int d, int s, double p, const std::string& name,
                             std::vector<double> raw_coeffs, double lp_norm) {
  LpTypeTarget target;
  target.d = d;
  target.s = s;
  target.p = p;
  target.profile_name = name;
  target.lp_norm = lp_norm;

  // Parity projection: the opposite-parity condition forces a_i = 0 whenever
  // i == s (mod 2). Track the removed L2 mass.
  double kept = 0.0, dropped = 0.0;
  for (int i = 0; i < static_cast<int>(raw_coeffs.size()); ++i) {
    const double mass = static_cast<double>(harmonic_dim(d, i)) * raw_coeffs[i] * raw_coeffs[i];
    if (i % 2 == s % 2) {
      dropped += mass;
      raw_coeffs[i] = 0.0;
    } else {
      kept += mass;
    }
  }
  target.discarded_mass_fraction = (kept + dropped) > 0.0 ? dropped / (kept + dropped) : 0.0;
  target.density.d = d;
  target.density.coeffs = std::move(raw_coeffs);

  const FunkHeckeSpectrum spec = funk_hecke_coeff(d, s, target.density.maxdeg());
  target.induced = apply_funk_hecke(spec, target.density);
  return target;
}

}  // namespace

ZonalProfile constant_profile(double c) {
  return {"constant(" + std::to_string(c) + ")", [c](double) { return c; }, {}};
}

ZonalProfile gegenbauer_profile(int d, int k) {
  return {"gegenbauer(" + std::to_string(k) + ")",
          [d, k](double t) { return gegenbauer_eval(d, k, t); },
          {}};
}

LpTypeTarget make_lp_target(int d, int s, double p, const ZonalProfile& profile, int maxdeg) {
  if (!(p >= 1.0 && p <= 2.0)) throw std::invalid_argument("make_lp_target: p must be in [1,2]");
  auto coeffs = project_zonal_all(profile.value, d, maxdeg, profile.kinks);
  const double lp = profile_lp_norm(profile.value, d, p, profile.kinks);
  return assemble_target(d, s, p, profile.name, std::move(coeffs), lp);
}

double zeta_exponent(int d, double p) {
  const double p_star = (2.0 * d + 2.0) / (d + 3.0);
  if (p <= p_star) return d * (1.0 / p - 0.5) - 0.5;
  return 0.5 * (d - 1.0) * (1.0 / p - 0.5);
}

LpTypeTarget make_lp_target_near_extremal(int d, int s, double p, double eps, int maxdeg) {
  if (!(p >= 1.0 && p <= 2.0))
    throw std::invalid_argument("make_lp_target_near_extremal: p must be in [1,2]");
  const double zeta = zeta_exponent(d, p);
  std::vector<double> coeffs(maxdeg + 1, 0.0);
  for (int i = 1; i <= maxdeg; ++i) {
    if (i % 2 == s % 2) continue;  // will be projected away regardless
    const double mode_l2 = std::pow(static_cast<double>(i), zeta - eps);
    coeffs[i] = mode_l2 / std::sqrt(static_cast<double>(harmonic_dim(d, i)));
  }

  // The profile exists pointwise as the synthesized polynomial; its L^p norm
  // comes from a vectorized quadrature of that synthesis.
  ZonalSpectrum density;
  density.d = d;
  density.coeffs = coeffs;
  const double lp = lp_norm_of_spectrum(density, p);

  return assemble_target(d, s, p, "near-extremal(eps=" + std::to_string(eps) + ")",
                         std::move(coeffs), lp);
}

std::function<double(const Eigen::VectorXd&)> lift_to_sphere(
    std::function<double(const Eigen::VectorXd&)> f, int s) {
  return [f = std::move(f), s](const Eigen::VectorXd& u) {
    const int dim = static_cast<int>(u.size()) - 1;
    if (dim < 1) throw std::invalid_argument("lift_to_sphere: point must live on S^d");
    const double last = u[dim];
    if (last < M_SQRT1_2 - 1e-12)
      throw std::domain_error("lift_to_sphere: point outside the cap u_{d+1} >= sqrt(2)/2");
    const Eigen::VectorXd x = u.head(dim) / last;
    return std::pow(last, s) * f(x);
  };
}

Eigen::VectorXd cap_point(const Eigen::VectorXd& x) {
  Eigen::VectorXd u(x.size() + 1);
  u.head(x.size()) = x;
  u[x.size()] = 1.0;
  return u / std::sqrt(x.squaredNorm() + 1.0);
}

std::function<double(const Eigen::VectorXd&)> reverse_map(
    std::function<double(const Eigen::VectorXd&)> g, int s) {
  return [g = std::move(g), s](const Eigen::VectorXd& x) {
    const double scale = std::pow(x.squaredNorm() + 1.0, 0.5 * s);
    return scale * g(cap_point(x));
  };
}

BarronTarget make_barron_target(int d, int s, int atoms, std::uint64_t seed) {
  if (atoms < 1) throw std::invalid_argument("make_barron_target: atoms must be >= 1");
  Rng rng = Rng::derive(seed, 0xBA880);
  std::vector<Neuron> neurons(atoms);
  for (Neuron& n : neurons) {
    // uniform on the l1 sphere: normalized exponentials with random signs
    n.w.resize(d);
    double l1 = 0.0;
    for (int k = 0; k < d; ++k) {
      n.w[k] = rng.sign() * rng.exponential();
      l1 += std::abs(n.w[k]);
    }
    n.w /= l1;
    n.b = rng.uniform(-1.0, 1.0);
    n.a = rng.normal();
  }
  ShallowNet raw(ReluOrder(s), d, neurons);
  const double norm = path_norm(raw);
  if (norm > 0.0) {
    for (Neuron& n : neurons) n.a /= norm;
  }
  ShallowNet net(ReluOrder(s), d, std::move(neurons));
  return {net, path_norm(net)};
}

SobolevTarget gaussian_bump(int d) {
  SobolevTarget t;
  t.name = "gaussian-bump";
  t.d = d;
  t.value = [](const Eigen::VectorXd& x) { return std::exp(-x.squaredNorm()); };
  t.gradient = [](const Eigen::VectorXd& x) {
    return Eigen::VectorXd(-2.0 * std::exp(-x.squaredNorm()) * x);
  };
  t.support_radius = 6.0;  // numerically negligible beyond this
  return t;
}

SobolevTarget polynomial_bump(int d) {
  SobolevTarget t;
  t.name = "polynomial-bump";
  t.d = d;
  t.value = [](const Eigen::VectorXd& x) {
    const double r2 = x.squaredNorm();
    return (1.0 - r2) * std::exp(-r2);
  };
  t.gradient = [](const Eigen::VectorXd& x) {
    const double r2 = x.squaredNorm();
    const double e = std::exp(-r2);
    return Eigen::VectorXd((-2.0 * e - 2.0 * (1.0 - r2) * e) * x);
  };
  t.support_radius = 6.0;
  return t;
}

SobolevTarget cosine_product(int d, double freq) {
  SobolevTarget t;
  t.name = "cosine-product";
  t.d = d;
  t.value = [freq](const Eigen::VectorXd& x) {
    double acc = 1.0;
    for (int k = 0; k < x.size(); ++k) acc *= std::cos(freq * x[k]);
    return acc;
  };
  t.gradient = [freq](const Eigen::VectorXd& x) {
    Eigen::VectorXd g(x.size());
    for (int k = 0; k < x.size(); ++k) {
      double acc = -freq * std::sin(freq * x[k]);
      for (int l = 0; l < x.size(); ++l)
        if (l != k) acc *= std::cos(freq * x[l]);
      g[k] = acc;
    }
    return g;
  };
  t.support_radius = 1.0;
  return t;
}

SobolevTarget affine_target(int d, Eigen::VectorXd slope, double offset) {
  if (slope.size() != d) throw std::invalid_argument("affine_target: slope dimension mismatch");
  SobolevTarget t;
  t.name = "affine";
  t.d = d;
  t.value = [slope, offset](const Eigen::VectorXd& x) { return slope.dot(x) + offset; };
  t.gradient = [slope](const Eigen::VectorXd&) { return slope; };
  t.support_radius = 1.0;
  return t;
}

}  // namespace rlab
