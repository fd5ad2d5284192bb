#include "rlab/ratefit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rlab/rng.hpp"

namespace rlab {

namespace {

struct Ols {
  double slope;
  double intercept;
};

Ols ols(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t n = xs.size();
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (sxx == 0.0) throw std::invalid_argument("fit_loglog: abscissae are all equal");
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

}  // namespace

RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys, int bootstrap_reps,
                   std::uint64_t seed) {
  if (xs.size() != ys.size()) throw std::invalid_argument("fit_loglog: size mismatch");
  std::vector<double> lx, ly;
  int excluded = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(ys[i] > 0.0) || !(xs[i] > 0.0)) {
      ++excluded;
      continue;
    }
    lx.push_back(std::log(xs[i]));
    ly.push_back(std::log(ys[i]));
  }
  if (lx.size() < 3)
    throw std::invalid_argument("fit_loglog: fewer than 3 usable (positive) points");

  const Ols fit = ols(lx, ly);

  double ss_res = 0.0, ss_tot = 0.0, my = 0.0;
  for (double v : ly) my += v;
  my /= ly.size();
  std::vector<double> residuals(ly.size());
  for (std::size_t i = 0; i < ly.size(); ++i) {
    const double pred = fit.intercept + fit.slope * lx[i];
    residuals[i] = ly[i] - pred;
    ss_res += residuals[i] * residuals[i];
    ss_tot += (ly[i] - my) * (ly[i] - my);
  }

  RateFit out;
  out.slope = fit.slope;
  out.intercept = fit.intercept;
  out.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
  out.n_points = static_cast<int>(ly.size());
  out.excluded = excluded;

  // residual-resampling bootstrap, percentile interval
  Rng rng = Rng::derive(seed, 0xB007);
  std::vector<double> slopes;
  slopes.reserve(bootstrap_reps);
  std::vector<double> resampled(ly.size());
  for (int rep = 0; rep < bootstrap_reps; ++rep) {
    for (std::size_t i = 0; i < ly.size(); ++i) {
      const double pred = fit.intercept + fit.slope * lx[i];
      resampled[i] = pred + residuals[rng.uniform_index(residuals.size())];
    }
    slopes.push_back(ols(lx, resampled).slope);
  }
  std::sort(slopes.begin(), slopes.end());
  const auto quantile = [&](double q) {
    const double pos = q * (slopes.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(pos);
    const std::size_t hi = std::min(lo + 1, slopes.size() - 1);
    const double frac = pos - lo;
    return (1.0 - frac) * slopes[lo] + frac * slopes[hi];
  };
  out.ci_lo = std::min(quantile(0.025), out.slope);
  out.ci_hi = std::max(quantile(0.975), out.slope);
  return out;
}

}  // namespace rlab
