#include "rlab/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <tuple>

namespace rlab {

namespace {

// Recurrence coefficients of the monic Jacobi polynomials:
//   p_{k+1}(x) = (x - a_k) p_k(x) - b_k p_{k-1}(x).
double jacobi_a(double alpha, double beta, int k) {
  if (k == 0) {
    const double s = alpha + beta + 2.0;
    return (beta - alpha) / s;
  }
  const double h = 2.0 * k + alpha + beta;
  return (beta * beta - alpha * alpha) / (h * (h + 2.0));
}

double jacobi_b(double alpha, double beta, int k) {
  if (k == 1) {
    const double s = alpha + beta;
    return 4.0 * (alpha + 1.0) * (beta + 1.0) / ((s + 2.0) * (s + 2.0) * (s + 3.0));
  }
  const double h = 2.0 * k + alpha + beta;
  return 4.0 * k * (k + alpha) * (k + beta) * (k + alpha + beta) /
         (h * h * (h + 1.0) * (h - 1.0));
}

// mu_0 = int (1-x)^alpha (1+x)^beta dx = 2^(alpha+beta+1) B(alpha+1, beta+1).
double jacobi_mu0(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) +
                  std::lgamma(beta + 1.0) - std::lgamma(alpha + beta + 2.0));
}

QuadratureRule build_rule(double alpha, double beta, int n) {
  Eigen::VectorXd diag(n);
  Eigen::VectorXd subdiag(n > 1 ? n - 1 : 0);
  for (int k = 0; k < n; ++k) diag[k] = jacobi_a(alpha, beta, k);
  for (int k = 1; k < n; ++k) subdiag[k - 1] = std::sqrt(jacobi_b(alpha, beta, k));

  QuadratureRule rule;
  if (n == 1) {
    rule.nodes = Eigen::ArrayXd::Constant(1, diag[0]);
    rule.weights = Eigen::ArrayXd::Constant(1, jacobi_mu0(alpha, beta));
    return rule;
  }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, subdiag, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw QuadratureError("gauss_jacobi: tridiagonal eigensolver failed");
  rule.nodes = solver.eigenvalues().array();

  // Christoffel weights: w_i = 1 / sum_{k<n} p_k(x_i)^2 with orthonormal p_k.
  const double mu0 = jacobi_mu0(alpha, beta);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    const double x = rule.nodes[i];
    double pm = 0.0;
    double pc = 1.0 / std::sqrt(mu0);
    double sum = pc * pc;
    for (int k = 0; k < n - 1; ++k) {
      const double bk = (k == 0) ? 0.0 : std::sqrt(jacobi_b(alpha, beta, k));
      const double bk1 = std::sqrt(jacobi_b(alpha, beta, k + 1));
      const double pn = ((x - jacobi_a(alpha, beta, k)) * pc - bk * pm) / bk1;
      pm = pc;
      pc = pn;
      sum += pc * pc;
    }
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

struct RuleKey {
  int alpha2;
  int beta2;
  int n;
  bool operator<(const RuleKey& other) const {
    return std::tie(alpha2, beta2, n) < std::tie(other.alpha2, other.beta2, other.n);
  }
};

std::shared_mutex g_cache_mutex;
std::map<RuleKey, std::unique_ptr<QuadratureRule>> g_cache;

}  // namespace

const QuadratureRule& gauss_jacobi(double alpha, double beta, int n) {
  if (n < 1) throw std::invalid_argument("gauss_jacobi: order must be >= 1");
  if (alpha <= -1.0 || beta <= -1.0)
    throw std::invalid_argument("gauss_jacobi: exponents must exceed -1");
  const int a2 = static_cast<int>(std::lround(2.0 * alpha));
  const int b2 = static_cast<int>(std::lround(2.0 * beta));
  if (std::abs(2.0 * alpha - a2) > 1e-12 || std::abs(2.0 * beta - b2) > 1e-12)
    throw std::invalid_argument("gauss_jacobi: only half-integer exponents are cached");
  const RuleKey key{a2, b2, n};
  {
    std::shared_lock lock(g_cache_mutex);
    auto it = g_cache.find(key);
    if (it != g_cache.end()) return *it->second;
  }
  auto rule = std::make_unique<QuadratureRule>(build_rule(alpha, beta, n));
  std::unique_lock lock(g_cache_mutex);
  auto [it, inserted] = g_cache.emplace(key, std::move(rule));
  return *it->second;
}

double integrate_jacobi(const std::function<double(double)>& f, double alpha, double beta,
                        double abs_tol, double rel_tol, double fail_tol, int n_start,
                        int n_max) {
  auto apply = [&](int n) {
    const QuadratureRule& rule = gauss_jacobi(alpha, beta, n);
    double acc = 0.0;
    for (int i = 0; i < rule.nodes.size(); ++i) acc += rule.weights[i] * f(rule.nodes[i]);
    return acc;
  };
  double prev = apply(n_start);
  double cur = prev;
  double diff = std::numeric_limits<double>::infinity();
  for (int n = 2 * n_start; n <= n_max; n *= 2) {
    cur = apply(n);
    diff = std::abs(cur - prev);
    if (diff <= std::max(abs_tol, rel_tol * std::abs(cur))) return cur;
    prev = cur;
  }
  if (diff > fail_tol)
    throw QuadratureError("integrate_jacobi: no convergence at maximum order");
  return cur;
}

double sphere_area(int d) {
  if (d < 0) throw std::invalid_argument("sphere_area: dimension must be >= 0");
  const double half = 0.5 * (d + 1);
  return 2.0 * std::exp(half * std::log(M_PI) - std::lgamma(half));
}

}  // namespace rlab
