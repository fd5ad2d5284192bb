#include "rlab/rational.hpp"

#include <cmath>

namespace rlab {

Rational rationalize(double x, long long max_den) {
  if (!std::isfinite(x)) throw std::invalid_argument("rationalize: non-finite input");
  const bool negative = x < 0.0;
  double v = std::abs(x);
  // Continued-fraction convergents p_k/q_k.
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    const double fl = std::floor(v);
    if (fl > 9e17) break;
    const long long a = static_cast<long long>(fl);
    const long long p2 = a * p1 + p0;
    const long long q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const double frac = v - fl;
    if (frac < 1e-15) break;
    v = 1.0 / frac;
  }
  if (q1 == 0) throw std::invalid_argument("rationalize: no convergent within bound");
  return Rational(negative ? -p1 : p1, q1);
}

}  // namespace rlab
