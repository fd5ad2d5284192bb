#pragma once

#include <cstdint>
#include <vector>

#include "rlab/sampling.hpp"

namespace rlab {

struct ComplexityConfig {
  int candidates = 128;    // random atoms per trial
  int ascent_steps = 25;   // projected-ascent refinements of the best atoms
  int ascent_pool = 8;     // how many top atoms get refined
  double ascent_lr = 0.2;
};

// Monte Carlo lower estimate of the local complexity
//   G_n(F, delta, xi) = E_xi sup { |(1/n) sum xi_i f(x_i)| :
//                                  f in path-norm ball M, ||f||_{mu_n} <= delta }.
// The supremum is searched over single-atom networks (the extreme rays of the
// path-norm ball) scaled to the binding constraint, refined by projected
// ascent on the l1 parameter sphere. Candidate streams depend only on
// (seed, trial), so estimates are pointwise monotone in delta.
struct ComplexityEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int trials = 0;
};

ComplexityEstimate local_complexity_mc(int d, int s, double path_bound, double delta, int n,
                                       const NoiseModel& noise, int trials, std::uint64_t seed,
                                       const ComplexityConfig& cfg = {});

// Same estimator across an increasing delta grid; maximizers found at smaller
// delta seed the larger-delta searches, so the curve is nondecreasing by
// construction.
std::vector<ComplexityEstimate> local_complexity_curve(int d, int s, double path_bound,
                                                       const std::vector<double>& deltas, int n,
                                                       const NoiseModel& noise, int trials,
                                                       std::uint64_t seed,
                                                       const ComplexityConfig& cfg = {});

}  // namespace rlab
