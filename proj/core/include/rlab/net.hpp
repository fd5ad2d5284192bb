#pragma once

#include <Eigen/Core>
#include <string>
#include <vector>

namespace rlab {

// Activation order for sigma_s(t) = max(0,t)^s. Order 0 is the
// right-continuous Heaviside step (sigma_0(0) = 1), order 1 the plain ReLU.
struct ReluOrder {
  int s;
  explicit ReluOrder(int order);
};

struct Neuron {
  double a = 0.0;       // outer weight
  Eigen::VectorXd w;    // inner weights, length d
  double b = 0.0;       // bias
};

// Width-m one-hidden-layer network f(x) = (1/m) sum_j a_j sigma_s(w_j.x + b_j).
// Immutable after construction; safe to share across threads.
class ShallowNet {
 public:
  ShallowNet(ReluOrder order, int dim, std::vector<Neuron> neurons);

  int order() const { return order_.s; }
  int dim() const { return dim_; }
  int width() const { return static_cast<int>(neurons_.size()); }
  const std::vector<Neuron>& neurons() const { return neurons_; }

 private:
  ReluOrder order_;
  int dim_;
  std::vector<Neuron> neurons_;
};

double activate(ReluOrder order, double t);

// d/dt sigma_s(t) = s * sigma_{s-1}(t); at the s = 1 kink the right derivative
// (active side) is used. Requires s >= 1.
double activate_derivative(ReluOrder order, double t);

double eval(const ShallowNet& net, const Eigen::VectorXd& x);
std::vector<double> eval_batch(const ShallowNet& net, const std::vector<Eigen::VectorXd>& xs);

// (1/m) sum_j |a_j| (||w_j||_1 + |b_j|)^s; the weight factor is 1 when s = 0.
double path_norm(const ShallowNet& net);

// Variant with the Euclidean inner norm, (1/m) sum_j |a_j| (||w_j||_2 + |b_j|)^s.
double path_norm_euclidean(const ShallowNet& net);

// Worst-case blowup of the l1 path norm over the Euclidean one for inner
// weights on the unit sphere with |b| <= sqrt(d): 2^s d^(s/2).
double path_norm_conversion_factor(int d, int s);

// Rescales every neuron with ||w||_1 + |b| > 0 onto the l1 unit sphere,
// absorbing the scale into the outer weight by s-homogeneity. Pointwise
// evaluation and the path norm are preserved; zero neurons pass through
// unchanged. Requires s >= 1.
ShallowNet normalize(const ShallowNet& net);

struct TruncationLevel {
  double B;
  explicit TruncationLevel(double level);
  static TruncationLevel unbounded();
};

// pi_B(y) = max(-B, min(y, B)).
double truncate(TruncationLevel level, double y);

struct ParamGradient {
  Eigen::VectorXd da;  // length m
  Eigen::MatrixXd dw;  // m x d
  Eigen::VectorXd db;  // length m
};

// Closed-form gradient of eval(net, x) with respect to every parameter.
// Requires s >= 1 (order 0 has no usable gradient).
ParamGradient grad_params(const ShallowNet& net, const Eigen::VectorXd& x);

// JSON serialization, format tag "relus-net-v1":
//   {"fmt": "relus-net-v1", "s": ..., "d": ..., "m": ...,
//    "neurons": [{"a": ..., "w": [...], "b": ...}, ...]}
std::string to_json(const ShallowNet& net);
ShallowNet net_from_json(const std::string& text);

}  // namespace rlab
