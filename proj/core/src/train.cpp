#include "rlab/train.hpp"

#include <cmath>
#include <stdexcept>

#include "rlab/rng.hpp"

namespace rlab {

namespace {

struct PackedState {
  Eigen::VectorXd a;   // m
  Eigen::MatrixXd w;   // m x d, rows on the l1 sphere (or zero)
  Eigen::VectorXd b;   // m
};

Eigen::ArrayXXd activate_array(const Eigen::ArrayXXd& z, int s) {
  if (s == 1) return z.max(0.0);
  if (s == 2) return z.max(0.0).square();
  return z.max(0.0).pow(s);
}

// s * sigma_{s-1}(z); right-continuous at the s = 1 kink.
Eigen::ArrayXXd activate_deriv_array(const Eigen::ArrayXXd& z, int s) {
  if (s == 1) return (z >= 0.0).cast<double>();
  if (s == 2) return 2.0 * z.max(0.0);
  return s * z.max(0.0).pow(s - 1);
}

class Objective {
 public:
  Objective(const Dataset& data, int s, double lambda, int m)
      : x_(data.xs), y_(data.ys), s_(s), lambda_(lambda), m_(m) {}

  double risk(const PackedState& st) const {
    const Eigen::ArrayXXd z =
        ((x_ * st.w.transpose()).rowwise() + st.b.transpose()).array();
    const Eigen::VectorXd pred = activate_array(z, s_).matrix() * st.a / m_;
    return (pred - y_).squaredNorm() / x_.rows();
  }

  double value(const PackedState& st) const {
    return risk(st) + lambda_ / m_ * st.a.lpNorm<1>();
  }

  void gradients(const PackedState& st, Eigen::VectorXd& da, Eigen::MatrixXd& dw,
                 Eigen::VectorXd& db) const {
    const Eigen::Index n = x_.rows();
    const Eigen::ArrayXXd z =
        ((x_ * st.w.transpose()).rowwise() + st.b.transpose()).array();
    const Eigen::ArrayXXd sig = activate_array(z, s_);
    const Eigen::VectorXd pred = sig.matrix() * st.a / m_;
    const Eigen::VectorXd r = 2.0 / n * (pred - y_);
    da = sig.matrix().transpose() * r / m_;
    const Eigen::ArrayXXd gate =
        activate_deriv_array(z, s_).colwise() * r.array();  // n x m
    const Eigen::MatrixXd g = gate.matrix() * (1.0 / m_);
    dw = (g.transpose() * x_).array().colwise() * st.a.array();
    db = g.transpose() * Eigen::VectorXd::Ones(n);
    db.array() *= st.a.array();
  }

  double lambda() const { return lambda_; }
  int m() const { return m_; }
  int s() const { return s_; }

 private:
  const Eigen::MatrixXd& x_;
  const Eigen::VectorXd& y_;
  int s_;
  double lambda_;
  int m_;
};

double soft_threshold(double v, double thr) {
  if (v > thr) return v - thr;
  if (v < -thr) return v + thr;
  return 0.0;
}

// Project the inner parameters back onto the l1 sphere and absorb the scale
// into the outer weight.
void renormalize(PackedState& st, int s) {
  for (Eigen::Index j = 0; j < st.a.size(); ++j) {
    const double c = st.w.row(j).lpNorm<1>() + std::abs(st.b[j]);
    if (c > 0.0) {
      st.w.row(j) /= c;
      st.b[j] /= c;
      st.a[j] *= std::pow(c, s);
    } else {
      st.a[j] = 0.0;
    }
  }
}

PackedState random_init(int m, int d, Rng& rng) {
  PackedState st;
  st.a.resize(m);
  st.w.resize(m, d);
  st.b.resize(m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (int j = 0; j < m; ++j) {
    st.a[j] = scale * rng.normal();
    double l1 = 0.0;
    for (int k = 0; k <= d; ++k) {
      const double v = rng.sign() * rng.exponential();
      if (k < d)
        st.w(j, k) = v;
      else
        st.b[j] = v;
      l1 += std::abs(v);
    }
    st.w.row(j) /= l1;
    st.b[j] /= l1;
  }
  return st;
}

PackedState zero_init(int m, int d, Rng& rng) {
  PackedState st = random_init(m, d, rng);
  st.a.setZero();
  return st;
}

PackedState comparator_init(const ShallowNet& comparator, int m) {
  if (comparator.width() > m)
    throw std::invalid_argument("train_erm: comparator wider than the trained class");
  const ShallowNet unit = normalize(comparator);
  const int d = unit.dim();
  PackedState st;
  st.a = Eigen::VectorXd::Zero(m);
  st.w = Eigen::MatrixXd::Zero(m, d);
  st.b = Eigen::VectorXd::Zero(m);
  const double widen = static_cast<double>(m) / unit.width();
  for (int j = 0; j < unit.width(); ++j) {
    st.a[j] = unit.neurons()[j].a * widen;
    st.w.row(j) = unit.neurons()[j].w.transpose();
    st.b[j] = unit.neurons()[j].b;
  }
  // padding neurons: dead outer weight on an arbitrary sphere point
  for (int j = unit.width(); j < m; ++j) st.w(j, 0) = 1.0;
  return st;
}

struct RestartOutcome {
  PackedState state;
  double objective;
  double risk;
  double initial_path_norm;
  long long accepted;
};

RestartOutcome run_restart(const Objective& obj, PackedState st, int steps, double step0,
                           int max_backtracks) {
  const double lambda = obj.lambda();
  const int m = obj.m();
  const int s = obj.s();
  double current = obj.value(st);
  if (!std::isfinite(current)) throw std::runtime_error("train_erm: non-finite loss at step 0");
  const double initial_path = st.a.lpNorm<1>() / m;

  Eigen::VectorXd da, db;
  Eigen::MatrixXd dw;
  double eta = step0;
  long long accepted = 0;
  for (int step = 0; step < steps; ++step) {
    obj.gradients(st, da, dw, db);
    if (!da.allFinite() || !dw.allFinite() || !db.allFinite())
      throw std::runtime_error("train_erm: non-finite gradient at step " + std::to_string(step));

    eta = std::min(step0, 2.0 * eta);
    bool moved = false;
    for (int attempt = 0; attempt < max_backtracks; ++attempt) {
      PackedState trial;
      trial.w = st.w - eta * dw;
      trial.b = st.b - eta * db;
      trial.a = st.a - eta * da;
      renormalize(trial, s);
      for (Eigen::Index j = 0; j < trial.a.size(); ++j)
        trial.a[j] = soft_threshold(trial.a[j], eta * lambda / m);
      const double candidate = obj.value(trial);
      if (!std::isfinite(candidate))
        throw std::runtime_error("train_erm: non-finite loss at step " + std::to_string(step));
      if (candidate <= current) {
        st = std::move(trial);
        current = candidate;
        moved = true;
        ++accepted;
        break;
      }
      eta *= 0.5;
    }
    if (!moved) break;  // no decreasing step within the backtracking budget
  }
  const double final_risk = obj.risk(st);
  return {std::move(st), current, final_risk, initial_path, accepted};
}

ShallowNet to_net(const PackedState& st, int s, int d) {
  std::vector<Neuron> neurons(st.a.size());
  for (Eigen::Index j = 0; j < st.a.size(); ++j) {
    neurons[j].a = st.a[j];
    neurons[j].w = st.w.row(j).transpose();
    neurons[j].b = st.b[j];
  }
  return ShallowNet(ReluOrder(s), d, std::move(neurons));
}

}  // namespace

FitResult train_erm(const Dataset& data, ReluOrder order, const TrainConfig& cfg) {
  if (order.s < 1)
    throw std::invalid_argument("train_erm: order 0 networks are not trainable");
  if (cfg.m < 1) throw std::invalid_argument("train_erm: width must be >= 1");
  if (cfg.steps < 1) throw std::invalid_argument("train_erm: steps must be >= 1");
  if (cfg.lambda < 0.0) throw std::invalid_argument("train_erm: lambda must be >= 0");
  if (data.n() < 1) throw std::invalid_argument("train_erm: empty dataset");

  const int d = data.dim();
  const Objective obj(data, order.s, cfg.lambda, cfg.m);

  std::optional<RestartOutcome> best;
  int best_index = -1;
  // restarts 0..restarts-1 as configured (restart 0 = comparator when given),
  // plus one implicit zero-network restart; ties break toward the lowest index.
  for (int r = 0; r <= cfg.restarts; ++r) {
    Rng rng = Rng::derive(cfg.seed, 0x7EA10 + static_cast<std::uint64_t>(r));
    PackedState init;
    if (r == cfg.restarts)
      init = zero_init(cfg.m, d, rng);
    else if (r == 0 && cfg.comparator)
      init = comparator_init(*cfg.comparator, cfg.m);
    else
      init = random_init(cfg.m, d, rng);
    RestartOutcome outcome =
        run_restart(obj, std::move(init), cfg.steps, cfg.step0, cfg.max_backtracks);
    if (!best || outcome.objective < best->objective) {
      best = std::move(outcome);
      best_index = r;
    }
  }

  const double zero_objective = data.ys.squaredNorm() / data.n();
  if (best->objective > zero_objective + 1e-12)
    throw std::logic_error("train_erm: fit worse than the zero network");

  FitResult fit{to_net(best->state, order.s, d),
                best->risk,
                best->objective,
                best->initial_path_norm,
                best->state.a.lpNorm<1>() / cfg.m,
                best_index,
                best->accepted};
  return fit;
}

double predict_truncated(const FitResult& fit, const Eigen::VectorXd& x, TruncationLevel level) {
  return truncate(level, eval(fit.net, x));
}

McEstimate generalization_error(const ShallowNet& net,
                                const std::function<double(const Eigen::VectorXd&)>& target,
                                TruncationLevel level, int n_test, std::uint64_t seed) {
  if (n_test < 100) throw std::invalid_argument("generalization_error: n_test must be >= 100");
  const Eigen::MatrixXd xs = sample_uniform_ball(net.dim(), n_test, seed);
  double mean = 0.0, m2 = 0.0;
  for (int i = 0; i < n_test; ++i) {
    const Eigen::VectorXd x = xs.row(i).transpose();
    const double diff = truncate(level, eval(net, x)) - target(x);
    const double sq = diff * diff;
    const double delta = sq - mean;
    mean += delta / (i + 1);
    m2 += delta * (sq - mean);
  }
  const double variance = n_test > 1 ? m2 / (n_test - 1) : 0.0;
  return {mean, std::sqrt(variance / n_test), n_test};
}

}  // namespace rlab
