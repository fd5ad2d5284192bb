#pragma once

#include <Eigen/Core>
#include <cstdint>

namespace rlab {

// Dimension of the space of degree-i spherical harmonics on S^d, computed
// exactly as C(i+d, d) - C(i+d-2, d). Throws std::overflow_error when the
// count exceeds 64 bits.
std::uint64_t harmonic_dim(int d, int i);

// Gegenbauer (ultraspherical) polynomial for S^d, normalized so P_i(1) = 1,
// orthogonal on [-1,1] against (1-t^2)^((d-2)/2). Evaluated by the three-term
// recurrence
//   (i + d - 2) P_i = (2i + d - 3) t P_{i-1} - (i - 1) P_{i-2}.
double gegenbauer_eval(int d, int i, double t);

// Streaming evaluation of P_0, P_1, ... at a fixed set of abscissae; degree
// advances one step per call so whole spectra cost O(nodes * maxdeg).
class GegenbauerScan {
 public:
  GegenbauerScan(int d, Eigen::ArrayXd abscissae);

  int degree() const { return degree_; }
  const Eigen::ArrayXd& values() const { return cur_; }
  void advance();

 private:
  int d_;
  int degree_;
  Eigen::ArrayXd t_;
  Eigen::ArrayXd prev_;
  Eigen::ArrayXd cur_;
};

}  // namespace rlab
