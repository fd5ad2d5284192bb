#pragma once

#include <Eigen/Core>
#include <functional>
#include <optional>
#include <string>

#include "rlab/net.hpp"
#include "rlab/zonal.hpp"

namespace rlab {

// 1-D profile h on [-1,1] defining the zonal density a(theta) = h(theta.pole).
struct ZonalProfile {
  std::string name;
  std::function<double(double)> value;
  std::vector<double> kinks;  // interior quadrature split points
};

ZonalProfile constant_profile(double c);
ZonalProfile gegenbauer_profile(int d, int k);

// Target in the L^p-type class: zonal density spectrum, the induced function
// spectrum f_i = lambda_i * a_i, the quadrature L^p(tau_d) norm of the
// profile, and the L2-mass fraction removed by the parity projection.
struct LpTypeTarget {
  int d = 2;
  int s = 1;
  double p = 1.0;
  std::string profile_name;
  ZonalSpectrum density;   // after parity projection
  ZonalSpectrum induced;   // lambda * density
  double lp_norm = 0.0;
  double discarded_mass_fraction = 0.0;
};

// Projects the profile onto modes 0..maxdeg, zeroes the modes with parity
// equal to s (the inadmissible ones under the opposite-parity condition),
// records the discarded L2 mass fraction, applies the Funk-Hecke multipliers,
// and computes the L^p(tau_d) norm of the profile by quadrature.
LpTypeTarget make_lp_target(int d, int s, double p, const ZonalProfile& profile, int maxdeg);

// Density built directly in spectral form with ||a_i||_{L2} = i^(zeta(p) - eps)
// on admissible modes, saturating the spherical projection bound when
// eps = 0. zeta(p) is the projection-theorem exponent for (d, p).
LpTypeTarget make_lp_target_near_extremal(int d, int s, double p, double eps, int maxdeg);

double zeta_exponent(int d, double p);

// Lifting f on the ball to the spherical cap {u_{d+1} >= sqrt(2)/2}:
// (lift f)(u) = u_{d+1}^s f(u' / u_{d+1}). Throws std::domain_error outside
// the cap.
std::function<double(const Eigen::VectorXd&)> lift_to_sphere(
    std::function<double(const Eigen::VectorXd&)> f, int s);

// Reverse map g*(x) = (||x||^2 + 1)^(s/2) g(u_x), u_x = (x,1)/sqrt(||x||^2+1).
std::function<double(const Eigen::VectorXd&)> reverse_map(
    std::function<double(const Eigen::VectorXd&)> g, int s);

Eigen::VectorXd cap_point(const Eigen::VectorXd& x);  // u_x

// Random finite atom mixture: inner weights uniform on the l1 unit sphere,
// biases uniform on [-1,1], outer weights standard normal rescaled so the
// path norm is exactly 1. Its Barron norm is at most path_norm(net) since the
// atomic measure is a representation.
struct BarronTarget {
  ShallowNet net;
  double barron_norm_bound;
};

BarronTarget make_barron_target(int d, int s, int atoms, std::uint64_t seed);

// Closed-form smooth test functions with hand-derived gradients.
struct SobolevTarget {
  std::string name;
  int d = 2;
  std::function<double(const Eigen::VectorXd&)> value;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&)> gradient;
  double support_radius = 1.0;
};

SobolevTarget gaussian_bump(int d);                       // exp(-||x||^2)
SobolevTarget polynomial_bump(int d);                     // (1 - ||x||^2) exp(-||x||^2)
SobolevTarget cosine_product(int d, double freq);         // prod_k cos(freq x_k)
SobolevTarget affine_target(int d, Eigen::VectorXd slope, double offset);

}  // namespace rlab
