#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace rlab {

// OLS fit on (log x, log y) with a residual-resampling bootstrap CI for the
// slope. Points with y <= 0 are excluded and counted.
struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 1.0;
  double ci_lo = 0.0;  // 95% bootstrap interval, always containing the estimate
  double ci_hi = 0.0;
  int n_points = 0;
  int excluded = 0;
};

RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys,
                   int bootstrap_reps = 1000, std::uint64_t seed = 0);

}  // namespace rlab
