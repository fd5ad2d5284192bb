#include "rlab/complexity.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rlab/rng.hpp"

namespace rlab {

namespace {

struct Atom {
  Eigen::VectorXd w;  // length d
  double b = 0.0;     // ||w||_1 + |b| = 1
};

Atom random_atom(int d, Rng& rng) {
  Atom atom;
  atom.w.resize(d);
  double l1 = 0.0;
  for (int k = 0; k <= d; ++k) {
    const double v = rng.sign() * rng.exponential();
    if (k < d)
      atom.w[k] = v;
    else
      atom.b = v;
    l1 += std::abs(v);
  }
  atom.w /= l1;
  atom.b /= l1;
  return atom;
}

void project_atom(Atom& atom) {
  const double l1 = atom.w.lpNorm<1>() + std::abs(atom.b);
  if (l1 > 0.0) {
    atom.w /= l1;
    atom.b /= l1;
  } else {
    atom.w[0] = 1.0;
  }
}

struct AtomScore {
  double correlation = 0.0;  // (1/n) sum xi_i sigma_s(w.x_i + b)
  double emp_norm = 0.0;     // sqrt((1/n) sum sigma_s(w.x_i + b)^2)
};

AtomScore score_atom(const Atom& atom, const Eigen::MatrixXd& xs, const Eigen::VectorXd& xi,
                     int s) {
  const Eigen::ArrayXd z = (xs * atom.w).array() + atom.b;
  Eigen::ArrayXd sig;
  if (s == 0)
    sig = (z >= 0.0).cast<double>();
  else if (s == 1)
    sig = z.max(0.0);
  else
    sig = z.max(0.0).pow(s);
  const double n = static_cast<double>(xs.rows());
  return {(sig * xi.array()).sum() / n, std::sqrt(sig.square().sum() / n)};
}

// Best objective value an atom direction can reach inside both constraints:
// scale = min(M, delta / emp_norm), value = scale * |correlation|.
double atom_value(const AtomScore& score, double path_bound, double delta) {
  if (delta <= 0.0) return 0.0;
  double scale = path_bound;
  if (score.emp_norm > 0.0) scale = std::min(scale, delta / score.emp_norm);
  return scale * std::abs(score.correlation);
}

// One projected-ascent refinement step on the surrogate objective.
void ascend(Atom& atom, const Eigen::MatrixXd& xs, const Eigen::VectorXd& xi, int s,
            double path_bound, double delta, double lr) {
  if (s < 1) return;  // step activation has no usable gradient
  const Eigen::ArrayXd z = (xs * atom.w).array() + atom.b;
  Eigen::ArrayXd sig, dsig;
  if (s == 1) {
    sig = z.max(0.0);
    dsig = (z >= 0.0).cast<double>();
  } else {
    sig = z.max(0.0).pow(s);
    dsig = s * z.max(0.0).pow(s - 1);
  }
  const double n = static_cast<double>(xs.rows());
  const double corr = (sig * xi.array()).sum() / n;
  const double emp2 = sig.square().sum() / n;
  const double emp = std::sqrt(emp2);

  // gradient of corr and of emp wrt (w, b)
  const Eigen::ArrayXd gc = dsig * xi.array() / n;
  Eigen::VectorXd grad_corr_w = xs.transpose() * gc.matrix();
  const double grad_corr_b = gc.sum();

  double sign = corr >= 0.0 ? 1.0 : -1.0;
  Eigen::VectorXd gw;
  double gb;
  if (path_bound * emp <= delta || emp == 0.0) {
    // path constraint binds: maximize |corr|
    gw = sign * grad_corr_w;
    gb = sign * grad_corr_b;
  } else {
    // empirical-norm constraint binds: maximize |corr| / emp
    const Eigen::ArrayXd ge = dsig * sig / (n * emp);
    const Eigen::VectorXd grad_emp_w = xs.transpose() * ge.matrix();
    const double grad_emp_b = ge.sum();
    gw = sign * grad_corr_w / emp - std::abs(corr) * grad_emp_w / emp2;
    gb = sign * grad_corr_b / emp - std::abs(corr) * grad_emp_b / emp2;
  }
  atom.w += lr * gw;
  atom.b += lr * gb;
  project_atom(atom);
}

}  // namespace

std::vector<ComplexityEstimate> local_complexity_curve(int d, int s, double path_bound,
                                                       const std::vector<double>& deltas, int n,
                                                       const NoiseModel& noise, int trials,
                                                       std::uint64_t seed,
                                                       const ComplexityConfig& cfg) {
  if (trials < 1) throw std::invalid_argument("local_complexity: trials must be >= 1");
  if (path_bound <= 0.0) throw std::invalid_argument("local_complexity: path bound must be > 0");
  for (std::size_t k = 1; k < deltas.size(); ++k)
    if (deltas[k] < deltas[k - 1])
      throw std::invalid_argument("local_complexity: deltas must be nondecreasing");
  for (double delta : deltas)
    if (delta < 0.0) throw std::invalid_argument("local_complexity: delta must be >= 0");

  const Eigen::MatrixXd xs = sample_uniform_ball(d, n, seed);
  std::vector<double> sum(deltas.size(), 0.0), sumsq(deltas.size(), 0.0);

  for (int trial = 0; trial < trials; ++trial) {
    Rng noise_rng = Rng::derive(seed, 0x0E100 + static_cast<std::uint64_t>(trial));
    Eigen::VectorXd xi(n);
    for (int i = 0; i < n; ++i) xi[i] = draw_noise(noise, noise_rng);

    // candidate pool is a function of (seed, trial) only
    Rng cand_rng = Rng::derive(seed, 0xCA0D + static_cast<std::uint64_t>(trial));
    std::vector<Atom> pool;
    std::vector<AtomScore> scores;
    pool.reserve(cfg.candidates);
    for (int c = 0; c < cfg.candidates; ++c) {
      pool.push_back(random_atom(d, cand_rng));
      scores.push_back(score_atom(pool.back(), xs, xi, s));
    }

    double carry = 0.0;  // best value from smaller deltas stays feasible
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      const double delta = deltas[k];
      double best = carry;
      if (delta > 0.0) {
        // rank by the delta-specific value; refine the top few by ascent
        std::vector<int> order(pool.size());
        for (std::size_t c = 0; c < pool.size(); ++c) order[c] = static_cast<int>(c);
        std::partial_sort(order.begin(),
                          order.begin() + std::min<std::size_t>(cfg.ascent_pool, order.size()),
                          order.end(), [&](int a, int b) {
                            return atom_value(scores[a], path_bound, delta) >
                                   atom_value(scores[b], path_bound, delta);
                          });
        for (std::size_t c = 0; c < pool.size(); ++c)
          best = std::max(best, atom_value(scores[c], path_bound, delta));
        const int refine = std::min<int>(cfg.ascent_pool, static_cast<int>(order.size()));
        for (int r = 0; r < refine; ++r) {
          Atom atom = pool[order[r]];
          for (int it = 0; it < cfg.ascent_steps; ++it) {
            ascend(atom, xs, xi, s, path_bound, delta, cfg.ascent_lr);
            best = std::max(best, atom_value(score_atom(atom, xs, xi, s), path_bound, delta));
          }
          // refined atoms re-enter the pool for larger deltas
          pool[order[r]] = atom;
          scores[order[r]] = score_atom(atom, xs, xi, s);
        }
      }
      carry = best;
      sum[k] += best;
      sumsq[k] += best * best;
    }
  }

  std::vector<ComplexityEstimate> out(deltas.size());
  for (std::size_t k = 0; k < deltas.size(); ++k) {
    const double mean = sum[k] / trials;
    const double var = trials > 1 ? (sumsq[k] - trials * mean * mean) / (trials - 1) : 0.0;
    out[k] = {mean, std::sqrt(std::max(0.0, var) / trials), trials};
  }
  return out;
}

ComplexityEstimate local_complexity_mc(int d, int s, double path_bound, double delta, int n,
                                       const NoiseModel& noise, int trials, std::uint64_t seed,
                                       const ComplexityConfig& cfg) {
  return local_complexity_curve(d, s, path_bound, {delta}, n, noise, trials, seed, cfg).front();
}

}  // namespace rlab
