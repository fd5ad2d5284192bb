#pragma once

#include <Eigen/Core>
#include <functional>
#include <stdexcept>

namespace rlab {

struct QuadratureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Nodes/weights for int_{-1}^{1} f(x) (1-x)^alpha (1+x)^beta dx.
struct QuadratureRule {
  Eigen::ArrayXd nodes;
  Eigen::ArrayXd weights;
};

// Gauss-Jacobi rule of order n. Nodes come from the eigenvalues of the Jacobi
// matrix, weights from the Christoffel function. Rules for half-integer
// (alpha, beta) are cached behind a read-mostly table safe for concurrent
// readers.
const QuadratureRule& gauss_jacobi(double alpha, double beta, int n);

inline const QuadratureRule& gauss_legendre(int n) { return gauss_jacobi(0.0, 0.0, n); }

// Adaptive order-doubling integration of f against the Jacobi weight on
// [-1,1]; doubles until two consecutive orders agree to
// max(abs_tol, rel_tol*|I|). Throws QuadratureError when the final
// disagreement exceeds fail_tol.
double integrate_jacobi(const std::function<double(double)>& f, double alpha, double beta,
                        double abs_tol = 1e-13, double rel_tol = 1e-12,
                        double fail_tol = 1e-9, int n_start = 64, int n_max = 8192);

// Surface area of the unit sphere S^d in R^(d+1): 2 pi^((d+1)/2) / Gamma((d+1)/2).
double sphere_area(int d);

}  // namespace rlab
