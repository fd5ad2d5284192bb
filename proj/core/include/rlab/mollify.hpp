#pragma once

#include <Eigen/Core>
#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "rlab/targets.hpp"

namespace rlab {

// Radial C-infinity bump phi(x) = c_d exp(-1/(1-||x||^2)) on ||x|| < 1,
// normalized to unit integral; phi_eps(x) = eps^-d phi(x/eps).
struct MollifierSpec {
  int d = 2;
  double epsilon = 0.1;
  int alpha = 1;
  double normalization = 0.0;  // c_d, cached per dimension
};

MollifierSpec make_mollifier(int d, double epsilon, int alpha);

double mollifier_phi(const MollifierSpec& spec, const Eigen::VectorXd& x);

// The alternating binomial combination of scaled mollifications,
//   f_eps(x) = sum_{t=1}^{alpha} C(alpha,t) (-1)^(t-1) int phi_eps(y) f(x - t y) dy.
// Convolutions run on tensor Gauss-Legendre (order 24 per axis) for d <= 3 and
// on a 2^16-point Sobol sequence for d > 3, with the QMC error estimate kept
// on the object.
class MollifiedFunction {
 public:
  MollifiedFunction(SobolevTarget f, MollifierSpec spec);

  double operator()(const Eigen::VectorXd& x) const;
  double qmc_error_estimate() const { return qmc_error_estimate_; }

 private:
  double convolution(const Eigen::VectorXd& x, int t) const;

  SobolevTarget f_;
  MollifierSpec spec_;
  Eigen::MatrixXd nodes_;        // quadrature/QMC points in the unit cube ball
  Eigen::VectorXd node_weights;  // phi(z) * w(z) per node
  mutable double qmc_error_estimate_ = 0.0;
};

MollifiedFunction mollified_approx(const SobolevTarget& f, const MollifierSpec& spec);

// Pointwise alternating difference sum_{t=0}^{alpha} C(alpha,t) (-1)^t f(x - t y).
std::function<double(const Eigen::VectorXd&)> finite_difference(
    std::function<double(const Eigen::VectorXd&)> f, const Eigen::VectorXd& y, int alpha);

// Gray-code Sobol sequence (Joe-Kuo direction numbers, dimensions <= 16);
// points in [0,1)^dim starting at index 1.
class SobolSequence {
 public:
  explicit SobolSequence(int dim);
  Eigen::VectorXd next();

 private:
  int dim_;
  std::uint64_t index_ = 0;
  std::vector<std::array<std::uint32_t, 32>> directions_;
  std::vector<std::uint32_t> state_;
};

}  // namespace rlab
