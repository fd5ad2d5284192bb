#pragma once

#include <functional>
#include <vector>

namespace rlab {

// Degree-wise multipliers lambda_i of the zonal operator
//   a |-> int_{S^d} a(theta) sigma_s(theta . u) dtau_d(theta),
// i.e. lambda_i = (omega_{d-1}/omega_d) int_{-1}^{1} sigma_s(t) P_i(t)
// (1-t^2)^((d-2)/2) dt. lambda_i vanishes identically for i == s (mod 2),
// i >= s+1; those entries are snapped to exact zero.
struct FunkHeckeSpectrum {
  int d = 2;
  int s = 1;
  std::vector<double> lambdas;

  int maxdeg() const { return static_cast<int>(lambdas.size()) - 1; }
};

// Computes lambda_0..lambda_maxdeg by Gauss-Jacobi quadrature of the defining
// integral, split at t = 0 to isolate the activation kink. Throws
// QuadratureError if consecutive orders disagree by more than 1e-9.
FunkHeckeSpectrum funk_hecke_coeff(int d, int s, int maxdeg);

// Projection of a zonal profile h(t) onto degree i:
//   h_i = (omega_{d-1}/omega_d) int h(t) P_i(t) (1-t^2)^((d-2)/2) dt.
// Optional interior split points isolate kinks of h.
double project_zonal(const std::function<double(double)>& h, int d, int i,
                     const std::vector<double>& splits = {});

// All projections 0..maxdeg in one streaming pass (O(nodes * maxdeg)).
std::vector<double> project_zonal_all(const std::function<double(double)>& h, int d, int maxdeg,
                                      const std::vector<double>& splits = {});

// Closed-form lambda values as printed in the source material: available at
// i = 0 and on the surviving high modes i >= s+1, i == s+1 (mod 2); NaN
// elsewhere. The defining integral, not this table, is the ground truth; the
// spectrum CLI reports the ratio between the two.
double funk_hecke_closed_form(int d, int s, int i);

// omega_{d-1}/omega_d.
double sphere_area_ratio(int d);

}  // namespace rlab
