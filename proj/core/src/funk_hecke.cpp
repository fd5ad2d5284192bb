#include "rlab/funk_hecke.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"

namespace rlab {

namespace {

struct Segment {
  double lo;
  double hi;
};

// Projections of h onto degrees 0..maxdeg over one segment of [-1,1] with the
// weight (1-t^2)^((d-2)/2), using a rule of the requested order. Endpoint
// weight singularities are absorbed into the Jacobi exponents; smooth factors
// fold into the integrand.
Eigen::ArrayXd segment_projections(const std::function<double(double)>& h, int d, int maxdeg,
                                   const Segment& seg, int order) {
  const double a = 0.5 * (d - 2);
  const bool at_right = seg.hi >= 1.0;
  const bool at_left = seg.lo <= -1.0;
  const double half = 0.5 * (seg.hi - seg.lo);
  const double mid = 0.5 * (seg.hi + seg.lo);

  double alpha = 0.0, beta = 0.0;
  if (at_right) alpha = a;
  if (at_left) beta = a;
  const QuadratureRule& rule = gauss_jacobi(alpha, beta, order);

  const int n = static_cast<int>(rule.nodes.size());
  Eigen::ArrayXd t(n), f(n);
  for (int k = 0; k < n; ++k) {
    const double u = rule.nodes[k];
    const double tk = mid + half * u;
    t[k] = std::clamp(tk, -1.0, 1.0);
    double g = h(t[k]);
    // Jacobian and the parts of the weight not covered by the rule. The rule
    // integrates (1-u)^alpha (1+u)^beta; with t = mid + half*u we have
    // 1 -+ t = (1 -+ mid) -+ half*u, which matches half*(1 -+ u) only at a
    // true endpoint.
    double w = half;
    if (at_right)
      w *= std::pow(half, a);
    else if (a != 0.0)
      w *= std::pow(1.0 - t[k], a);
    if (at_left)
      w *= std::pow(half, a);
    else if (a != 0.0)
      w *= std::pow(1.0 + t[k], a);
    f[k] = g * w * rule.weights[k];
  }

  Eigen::ArrayXd out(maxdeg + 1);
  GegenbauerScan scan(d, t);
  out[0] = f.sum();
  for (int i = 1; i <= maxdeg; ++i) {
    scan.advance();
    out[i] = (f * scan.values()).sum();
  }
  return out;
}

Eigen::ArrayXd all_projections(const std::function<double(double)>& h, int d, int maxdeg,
                               const std::vector<Segment>& segments, int order) {
  Eigen::ArrayXd acc = Eigen::ArrayXd::Zero(maxdeg + 1);
  for (const Segment& seg : segments) acc += segment_projections(h, d, maxdeg, seg, order);
  return acc * sphere_area_ratio(d);
}

std::vector<Segment> build_segments(const std::vector<double>& splits) {
  std::vector<double> cuts = splits;
  std::sort(cuts.begin(), cuts.end());
  std::vector<Segment> segments;
  double lo = -1.0;
  for (double c : cuts) {
    if (c <= -1.0 || c >= 1.0) throw std::invalid_argument("project_zonal: split outside (-1,1)");
    segments.push_back({lo, c});
    lo = c;
  }
  segments.push_back({lo, 1.0});
  return segments;
}

int next_pow2(int n) {
  int p = 1;
  while (p < n) p *= 2;
  return p;
}

Eigen::ArrayXd adaptive_projections(const std::function<double(double)>& h, int d, int maxdeg,
                                    const std::vector<double>& splits) {
  const auto segments = build_segments(splits);
  const int n_start = next_pow2(std::max(64, maxdeg / 2 + 4));
  const int n_max = std::max(8192, 4 * n_start);

  Eigen::ArrayXd prev = all_projections(h, d, maxdeg, segments, n_start);
  Eigen::ArrayXd cur = prev;
  double worst = std::numeric_limits<double>::infinity();
  for (int n = 2 * n_start; n <= n_max; n *= 2) {
    cur = all_projections(h, d, maxdeg, segments, n);
    worst = 0.0;
    bool converged = true;
    for (int i = 0; i <= maxdeg; ++i) {
      const double diff = std::abs(cur[i] - prev[i]);
      worst = std::max(worst, diff);
      if (diff > std::max(1e-13, 1e-11 * std::abs(cur[i]))) converged = false;
    }
    if (converged) return cur;
    prev = cur;
  }
  if (worst > 1e-9)
    throw QuadratureError("project_zonal: consecutive-order disagreement above 1e-9");
  return cur;
}

}  // namespace

double sphere_area_ratio(int d) {
  return std::exp(std::lgamma(0.5 * (d + 1)) - std::lgamma(0.5 * d)) / std::sqrt(M_PI);
}

std::vector<double> project_zonal_all(const std::function<double(double)>& h, int d, int maxdeg,
                                      const std::vector<double>& splits) {
  if (d < 2) throw std::invalid_argument("project_zonal: requires d >= 2");
  if (maxdeg < 0) throw std::invalid_argument("project_zonal: requires maxdeg >= 0");
  const Eigen::ArrayXd vals = adaptive_projections(h, d, maxdeg, splits);
  return {vals.data(), vals.data() + vals.size()};
}

double project_zonal(const std::function<double(double)>& h, int d, int i,
                     const std::vector<double>& splits) {
  return project_zonal_all(h, d, i, splits).back();
}

FunkHeckeSpectrum funk_hecke_coeff(int d, int s, int maxdeg) {
  if (d < 2) throw std::invalid_argument("funk_hecke_coeff: requires d >= 2");
  if (s < 0) throw std::invalid_argument("funk_hecke_coeff: requires s >= 0");
  if (maxdeg < 0) throw std::invalid_argument("funk_hecke_coeff: requires maxdeg >= 0");

  const auto sigma = [s](double t) {
    if (s == 0) return t >= 0.0 ? 1.0 : 0.0;
    const double u = t > 0.0 ? t : 0.0;
    return u == 0.0 ? 0.0 : std::pow(u, s);
  };
  FunkHeckeSpectrum spec;
  spec.d = d;
  spec.s = s;
  spec.lambdas = project_zonal_all(sigma, d, maxdeg, {0.0});

  // Parity-killed entries are exact zeros; snap sub-tolerance residue.
  for (int i = s + 1; i <= maxdeg; ++i) {
    if ((i - s) % 2 == 0 && std::abs(spec.lambdas[i]) < 1e-10) spec.lambdas[i] = 0.0;
  }
  if (!(spec.lambdas[0] > 0.0))
    throw std::logic_error("funk_hecke_coeff: lambda_0 must be positive");
  return spec;
}

double funk_hecke_closed_form(int d, int s, int i) {
  if (i == 0) {
    return sphere_area_ratio(d) *
           std::exp(std::lgamma(0.5 * d) + std::lgamma(0.5 * (s + 1)) -
                    std::lgamma(0.5 * (s + d + 1))) /
           2.0;
  }
  if (i >= s + 1 && (i - s) % 2 == 1) {
    return std::exp(std::lgamma(0.5 * d) + std::lgamma(static_cast<double>(i - s)) -
                    std::lgamma(0.5 * (i - s + 1)) - std::lgamma(0.5 * (i + d + s + 1)));
  }
  return std::numeric_limits<double>::quiet_NaN();
}

}  // namespace rlab
