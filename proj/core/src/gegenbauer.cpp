#include "rlab/gegenbauer.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace rlab {

namespace {

std::uint64_t binomial_checked(int n, int k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max())
      throw std::overflow_error("harmonic_dim: count exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(result);
}

double domain_checked(double t) {
  if (std::abs(t) > 1.0) {
    if (std::abs(t) - 1.0 > 1e-12)
      throw std::domain_error("gegenbauer_eval: abscissa outside [-1, 1]");
    t = t > 0.0 ? 1.0 : -1.0;
  }
  return t;
}

}  // namespace

std::uint64_t harmonic_dim(int d, int i) {
  if (d < 2) throw std::invalid_argument("harmonic_dim: requires d >= 2");
  if (i < 0) throw std::invalid_argument("harmonic_dim: requires i >= 0");
  if (i == 0) return 1;
  const std::uint64_t hi = binomial_checked(i + d, d);
  const std::uint64_t lo = binomial_checked(i + d - 2, d);
  return hi - lo;
}

double gegenbauer_eval(int d, int i, double t) {
  if (d < 2) throw std::invalid_argument("gegenbauer_eval: requires d >= 2");
  if (i < 0) throw std::invalid_argument("gegenbauer_eval: requires i >= 0");
  t = domain_checked(t);
  if (i == 0) return 1.0;
  if (i == 1) return t;
  double pm = 1.0;
  double pc = t;
  for (int k = 2; k <= i; ++k) {
    const double pn = ((2.0 * k + d - 3.0) * t * pc - (k - 1.0) * pm) / (k + d - 2.0);
    pm = pc;
    pc = pn;
  }
  return pc;
}

GegenbauerScan::GegenbauerScan(int d, Eigen::ArrayXd abscissae)
    : d_(d), degree_(0), t_(std::move(abscissae)) {
  if (d < 2) throw std::invalid_argument("GegenbauerScan: requires d >= 2");
  prev_ = Eigen::ArrayXd::Zero(t_.size());
  cur_ = Eigen::ArrayXd::Ones(t_.size());
}

void GegenbauerScan::advance() {
  const int k = degree_ + 1;
  Eigen::ArrayXd next;
  if (k == 1) {
    next = t_;
  } else {
    next = ((2.0 * k + d_ - 3.0) * t_ * cur_ - (k - 1.0) * prev_) / (k + d_ - 2.0);
  }
  prev_.swap(cur_);
  cur_.swap(next);
  degree_ = k;
}

}  // namespace rlab
