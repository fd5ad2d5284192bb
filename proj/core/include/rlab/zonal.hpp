#pragma once

#include <Eigen/Core>
#include <vector>

#include "rlab/funk_hecke.hpp"

namespace rlab {

// Zonal function on S^d represented on normalized Gegenbauer modes:
//   g(u) = sum_i coeffs[i] * N(d,i) * P_i(u . pole)
// for a fixed pole. coeffs[i] equals the 1-D projection of the profile, so
// the degree-i component has ||g_i||_{L2(tau_d)}^2 = N(d,i) * coeffs[i]^2.
struct ZonalSpectrum {
  int d = 2;
  std::vector<double> coeffs;

  int maxdeg() const { return static_cast<int>(coeffs.size()) - 1; }
};

// ||g||_{L2(tau_d)} = sqrt( sum_i N(d,i) coeffs[i]^2 ).
double parseval_norm(const ZonalSpectrum& g);

// F2-type norm sqrt( sum_{lambda_i != 0} lambda_i^{-2} N(d,i) coeffs[i]^2 );
// +infinity when g carries mass on a mode with lambda_i = 0.
double f2_norm(const FunkHeckeSpectrum& spec, const ZonalSpectrum& g);

// Mode-wise product (lambda_i * a_i): the spectrum of the zonal function
// u |-> int a(theta) sigma_s(theta . u) dtau_d(theta).
ZonalSpectrum apply_funk_hecke(const FunkHeckeSpectrum& spec, const ZonalSpectrum& a);

// Smooth cutoff: 1 on [0,1], 0 on [2,inf), monotone transition
// psi(2-t) / (psi(2-t) + psi(t-1)) with psi(x) = exp(-1/x) for x > 0.
double cutoff_eta(double t);

// Filtered approximant g_j: mode i scaled by eta(i/j). Modes i <= j pass
// through unchanged; modes i >= 2j are exactly zero, so g_j is a polynomial
// of degree at most 2j-1.
ZonalSpectrum filtered_approx(const ZonalSpectrum& g, int j);

// Fractional Laplace-Beltrami multiplier: mode i scaled by (i(i+d-1))^(alpha/2);
// mode 0 maps to 0 whenever alpha != 0.
ZonalSpectrum laplace_multiplier(const ZonalSpectrum& g, double alpha);

// Spherical translation T_beta realized through its multiplier P_i(cos beta).
ZonalSpectrum translate(const ZonalSpectrum& g, double beta);

// || Delta_beta^alpha g ||_{L2} = sqrt( sum_i (1 - P_i(cos beta))^alpha N(d,i) c_i^2 ),
// beta in (0, pi).
double difference_norm(const ZonalSpectrum& g, double alpha, double beta);

// Modulus of smoothness omega_alpha(g, t)_2, approximated by the max of
// difference_norm over a 64-point log-spaced grid of beta in (t/100, t].
// A lower estimate of the true supremum.
double modulus_smoothness(const ZonalSpectrum& g, double alpha, double t);

// Pointwise synthesis h(t) = sum_i coeffs[i] N(d,i) P_i(t).
double eval_zonal(const ZonalSpectrum& g, double t);
Eigen::ArrayXd eval_zonal(const ZonalSpectrum& g, const Eigen::ArrayXd& ts);

// L^p(tau_d) norm of the synthesized profile by two-order Gauss-Jacobi
// comparison; vectorized across nodes.
double lp_norm_of_spectrum(const ZonalSpectrum& g, double p);

// Direct L2(tau_d) norm of the synthesized profile by quadrature; test-grade
// cross-check for parseval_norm.
double quadrature_l2_norm(const ZonalSpectrum& g);

}  // namespace rlab
