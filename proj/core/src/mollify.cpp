#include "rlab/mollify.hpp"

#include <bit>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "rlab/quadrature.hpp"

namespace rlab {

namespace {

double bump_raw(double r2) { return r2 < 1.0 ? std::exp(-1.0 / (1.0 - r2)) : 0.0; }

double mollifier_normalization(int d) {
  static std::mutex mu;
  static std::map<int, double> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // int phi = surf(S^{d-1}) * int_0^1 r^{d-1} exp(-1/(1-r^2)) dr
  const double radial = integrate_jacobi(
      [d](double u) {
        const double r = 0.5 * (u + 1.0);
        return 0.5 * std::pow(r, d - 1) * bump_raw(r * r);
      },
      0.0, 0.0);
  const double c = 1.0 / (sphere_area(d - 1) * radial);
  cache[d] = c;
  return c;
}

double binom(int n, int k) {
  double acc = 1.0;
  for (int i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

// First rows of the Joe-Kuo D6 direction-number table.
struct JoeKuoRow {
  int s;
  std::uint32_t a;
  std::array<std::uint32_t, 6> m;
};
constexpr JoeKuoRow kJoeKuo[] = {
    {1, 0, {1}},           {2, 1, {1, 3}},         {3, 1, {1, 3, 1}},
    {3, 2, {1, 1, 1}},     {4, 1, {1, 1, 3, 3}},   {4, 4, {1, 3, 5, 13}},
    {5, 2, {1, 1, 5, 5, 17}}, {5, 4, {1, 1, 5, 5, 5}}, {5, 7, {1, 1, 7, 11, 19}},
    {5, 11, {1, 1, 5, 1, 1}}, {5, 13, {1, 1, 1, 3, 11}}, {5, 14, {1, 3, 5, 5, 31}},
    {6, 1, {1, 3, 3, 9, 7, 49}}, {6, 13, {1, 1, 1, 15, 21, 21}}, {6, 16, {1, 3, 1, 13, 27, 49}},
};

}  // namespace

SobolSequence::SobolSequence(int dim) : dim_(dim) {
  if (dim < 1 || dim > 16) throw std::invalid_argument("SobolSequence: 1 <= dim <= 16");
  directions_.resize(dim);
  state_.assign(dim, 0);
  // dimension 0: van der Corput in base 2
  for (int k = 0; k < 32; ++k) directions_[0][k] = 1u << (31 - k);
  for (int j = 1; j < dim; ++j) {
    const JoeKuoRow& row = kJoeKuo[j - 1];
    std::uint32_t m[33];
    for (int k = 1; k <= row.s; ++k) m[k] = row.m[k - 1];
    for (int k = row.s + 1; k <= 32; ++k) {
      m[k] = m[k - row.s] ^ (m[k - row.s] << row.s);
      for (int i = 1; i < row.s; ++i) m[k] ^= ((row.a >> (row.s - 1 - i)) & 1u) * (m[k - i] << i);
    }
    for (int k = 1; k <= 32; ++k) directions_[j][k - 1] = m[k] << (32 - k);
  }
}

Eigen::VectorXd SobolSequence::next() {
  ++index_;
  const int c = static_cast<int>(std::countr_zero(index_));
  if (c >= 32) throw std::length_error("SobolSequence: 32-bit sequence exhausted");
  Eigen::VectorXd point(dim_);
  for (int j = 0; j < dim_; ++j) {
    state_[j] ^= directions_[j][c];
    point[j] = static_cast<double>(state_[j]) * 0x1.0p-32;
  }
  return point;
}

MollifierSpec make_mollifier(int d, double epsilon, int alpha) {
  if (d < 1) throw std::invalid_argument("make_mollifier: d must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("make_mollifier: epsilon must be > 0");
  if (alpha < 1) throw std::invalid_argument("make_mollifier: alpha must be >= 1");
  MollifierSpec spec;
  spec.d = d;
  spec.epsilon = epsilon;
  spec.alpha = alpha;
  spec.normalization = mollifier_normalization(d);
  return spec;
}

double mollifier_phi(const MollifierSpec& spec, const Eigen::VectorXd& x) {
  if (x.size() != spec.d) throw std::invalid_argument("mollifier_phi: dimension mismatch");
  return spec.normalization * bump_raw(x.squaredNorm());
}

MollifiedFunction::MollifiedFunction(SobolevTarget f, MollifierSpec spec)
    : f_(std::move(f)), spec_(spec) {
  if (f_.d != spec_.d) throw std::invalid_argument("MollifiedFunction: dimension mismatch");
  const int d = spec_.d;
  std::vector<Eigen::VectorXd> pts;
  std::vector<double> wts;
  if (d <= 3) {
    const QuadratureRule& axis = gauss_legendre(24);
    const int n = static_cast<int>(axis.nodes.size());
    std::vector<int> idx(d, 0);
    while (true) {
      Eigen::VectorXd z(d);
      double w = 1.0;
      for (int k = 0; k < d; ++k) {
        z[k] = axis.nodes[idx[k]];
        w *= axis.weights[idx[k]];
      }
      const double phi = spec_.normalization * bump_raw(z.squaredNorm());
      if (phi > 0.0) {
        pts.push_back(z);
        wts.push_back(phi * w);
      }
      int k = 0;
      for (; k < d; ++k) {
        if (++idx[k] < n) break;
        idx[k] = 0;
      }
      if (k == d) break;
    }
  } else {
    const int n_qmc = 1 << 16;
    SobolSequence seq(d);
    const double cube = std::pow(2.0, d);
    double mass_half = 0.0, mass_full = 0.0;
    for (int q = 0; q < n_qmc; ++q) {
      const Eigen::VectorXd u = seq.next();
      const Eigen::VectorXd z = 2.0 * u.array() - 1.0;
      const double phi = spec_.normalization * bump_raw(z.squaredNorm());
      if (phi > 0.0) {
        pts.push_back(z);
        wts.push_back(phi * cube / n_qmc);
      }
      mass_full += phi * cube / n_qmc;
      if (q < n_qmc / 2) mass_half += phi * cube / (n_qmc / 2);
    }
    // reported estimate: defect of the unit mass plus half-sample drift
    qmc_error_estimate_ = std::abs(mass_full - 1.0) + std::abs(mass_full - mass_half);
  }
  nodes_.resize(d, static_cast<Eigen::Index>(pts.size()));
  node_weights.resize(static_cast<Eigen::Index>(pts.size()));
  for (std::size_t q = 0; q < pts.size(); ++q) {
    nodes_.col(static_cast<Eigen::Index>(q)) = pts[q];
    node_weights[static_cast<Eigen::Index>(q)] = wts[q];
  }
}

double MollifiedFunction::convolution(const Eigen::VectorXd& x, int t) const {
  double acc = 0.0;
  const double scale = t * spec_.epsilon;
  for (Eigen::Index q = 0; q < node_weights.size(); ++q)
    acc += node_weights[q] * f_.value(x - scale * nodes_.col(q));
  return acc;
}

double MollifiedFunction::operator()(const Eigen::VectorXd& x) const {
  double acc = 0.0;
  for (int t = 1; t <= spec_.alpha; ++t) {
    const double sign = (t % 2 == 1) ? 1.0 : -1.0;
    acc += sign * binom(spec_.alpha, t) * convolution(x, t);
  }
  return acc;
}

MollifiedFunction mollified_approx(const SobolevTarget& f, const MollifierSpec& spec) {
  return MollifiedFunction(f, spec);
}

std::function<double(const Eigen::VectorXd&)> finite_difference(
    std::function<double(const Eigen::VectorXd&)> f, const Eigen::VectorXd& y, int alpha) {
  if (alpha < 1) throw std::invalid_argument("finite_difference: alpha must be >= 1");
  return [f = std::move(f), y, alpha](const Eigen::VectorXd& x) {
    double acc = 0.0;
    for (int t = 0; t <= alpha; ++t) {
      const double sign = (t % 2 == 0) ? 1.0 : -1.0;
      acc += sign * binom(alpha, t) * f(x - t * y);
    }
    return acc;
  };
}

}  // namespace rlab
