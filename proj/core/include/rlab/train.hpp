#pragma once

#include <optional>

#include "rlab/net.hpp"
#include "rlab/sampling.hpp"

namespace rlab {

// Proximal-gradient ERM in the normalized parameterization: inner weights on
// the l1 unit sphere (so the path norm is (1/m) sum |a_j|), outer weights
// soft-thresholded, inner steps rescaled back to the sphere with the scale
// absorbed into a_j by s-homogeneity. Backtracking keeps the objective
// nonincreasing across accepted steps.
struct TrainConfig {
  int m = 32;
  double lambda = 0.0;
  int steps = 5000;
  double step0 = 0.1;  // backtracking halves from here
  int restarts = 8;
  std::uint64_t seed = 0;
  int max_backtracks = 40;
  // Optional comparator network: seeds restart 0, giving the oracle-direction
  // guarantee objective(fit) <= objective(comparator). Width must be <= m.
  std::optional<ShallowNet> comparator;
};

struct FitResult {
  ShallowNet net;
  double empirical_risk = 0.0;
  double objective = 0.0;
  double path_norm_initial = 0.0;
  double path_norm_final = 0.0;
  int restart_index = 0;
  long long accepted_steps = 0;
};

// Best-of-restarts approximation of the path-norm regularized empirical risk
// minimizer. One extra restart always starts at the zero network, so the
// returned objective never exceeds mean(y^2). Throws for s = 0 (no gradient)
// and on non-finite loss (message names the step).
FitResult train_erm(const Dataset& data, ReluOrder order, const TrainConfig& cfg);

double predict_truncated(const FitResult& fit, const Eigen::VectorXd& x, TruncationLevel level);

struct McEstimate {
  double value = 0.0;
  double std_error = 0.0;
  int n = 0;
};

// Monte Carlo estimate of || pi_B f - target ||^2_{L2(mu)} over fresh
// uniform-ball test points.
McEstimate generalization_error(const ShallowNet& net,
                                const std::function<double(const Eigen::VectorXd&)>& target,
                                TruncationLevel level, int n_test, std::uint64_t seed);

}  // namespace rlab
