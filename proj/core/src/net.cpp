#include "rlab/net.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace rlab {

ReluOrder::ReluOrder(int order) : s(order) {
  if (order < 0) throw std::invalid_argument("ReluOrder: s must be >= 0");
}

ShallowNet::ShallowNet(ReluOrder order, int dim, std::vector<Neuron> neurons)
    : order_(order), dim_(dim), neurons_(std::move(neurons)) {
  if (dim_ < 1) throw std::invalid_argument("ShallowNet: dimension must be >= 1");
  if (neurons_.empty()) throw std::invalid_argument("ShallowNet: width must be >= 1");
  for (const Neuron& nrn : neurons_) {
    if (nrn.w.size() != dim_)
      throw std::invalid_argument("ShallowNet: neuron dimension mismatch");
    if (!std::isfinite(nrn.a) || !std::isfinite(nrn.b) || !nrn.w.allFinite())
      throw std::invalid_argument("ShallowNet: non-finite parameter");
  }
}

double activate(ReluOrder order, double t) {
  switch (order.s) {
    case 0:
      return t >= 0.0 ? 1.0 : 0.0;
    case 1:
      return t > 0.0 ? t : 0.0;
    case 2: {
      const double u = t > 0.0 ? t : 0.0;
      return u * u;
    }
    default: {
      const double u = t > 0.0 ? t : 0.0;
      return u == 0.0 ? 0.0 : std::pow(u, order.s);
    }
  }
}

double activate_derivative(ReluOrder order, double t) {
  if (order.s < 1)
    throw std::invalid_argument("activate_derivative: order 0 has no usable gradient");
  return order.s * activate(ReluOrder(order.s - 1), t);
}

double eval(const ShallowNet& net, const Eigen::VectorXd& x) {
  if (x.size() != net.dim()) throw std::invalid_argument("eval: dimension mismatch");
  const ReluOrder order(net.order());
  double acc = 0.0;
  for (const Neuron& nrn : net.neurons()) acc += nrn.a * activate(order, nrn.w.dot(x) + nrn.b);
  return acc / net.width();
}

std::vector<double> eval_batch(const ShallowNet& net, const std::vector<Eigen::VectorXd>& xs) {
  std::vector<double> out;
  out.reserve(xs.size());
  for (const Eigen::VectorXd& x : xs) out.push_back(eval(net, x));
  return out;
}

namespace {

double inner_scale_pow(double scale, int s) {
  if (s == 0) return 1.0;
  if (s == 1) return scale;
  if (s == 2) return scale * scale;
  return std::pow(scale, s);
}

}  // namespace

double path_norm(const ShallowNet& net) {
  double acc = 0.0;
  for (const Neuron& nrn : net.neurons())
    acc += std::abs(nrn.a) * inner_scale_pow(nrn.w.lpNorm<1>() + std::abs(nrn.b), net.order());
  return acc / net.width();
}

double path_norm_euclidean(const ShallowNet& net) {
  double acc = 0.0;
  for (const Neuron& nrn : net.neurons())
    acc += std::abs(nrn.a) * inner_scale_pow(nrn.w.norm() + std::abs(nrn.b), net.order());
  return acc / net.width();
}

double path_norm_conversion_factor(int d, int s) {
  return std::pow(2.0, s) * std::pow(static_cast<double>(d), 0.5 * s);
}

ShallowNet normalize(const ShallowNet& net) {
  if (net.order() == 0)
    throw std::invalid_argument("normalize: order 0 is 0-homogeneous, not normalizable");
  std::vector<Neuron> scaled;
  scaled.reserve(net.neurons().size());
  for (const Neuron& nrn : net.neurons()) {
    const double c = nrn.w.lpNorm<1>() + std::abs(nrn.b);
    if (c == 0.0) {
      scaled.push_back(nrn);
      continue;
    }
    Neuron out;
    out.a = nrn.a * inner_scale_pow(c, net.order());
    out.w = nrn.w / c;
    out.b = nrn.b / c;
    scaled.push_back(std::move(out));
  }
  return ShallowNet(ReluOrder(net.order()), net.dim(), std::move(scaled));
}

TruncationLevel::TruncationLevel(double level) : B(level) {
  if (!(level > 0.0)) throw std::invalid_argument("TruncationLevel: B must be > 0");
}

TruncationLevel TruncationLevel::unbounded() {
  return TruncationLevel(std::numeric_limits<double>::infinity());
}

double truncate(TruncationLevel level, double y) {
  return std::max(-level.B, std::min(y, level.B));
}

ParamGradient grad_params(const ShallowNet& net, const Eigen::VectorXd& x) {
  if (net.order() < 1)
    throw std::invalid_argument("grad_params: order 0 has no usable gradient");
  if (x.size() != net.dim()) throw std::invalid_argument("grad_params: dimension mismatch");
  const int m = net.width();
  const ReluOrder order(net.order());
  ParamGradient g;
  g.da.resize(m);
  g.dw.resize(m, net.dim());
  g.db.resize(m);
  for (int j = 0; j < m; ++j) {
    const Neuron& nrn = net.neurons()[j];
    const double z = nrn.w.dot(x) + nrn.b;
    g.da[j] = activate(order, z) / m;
    const double slope = nrn.a * activate_derivative(order, z) / m;
    g.dw.row(j) = slope * x.transpose();
    g.db[j] = slope;
  }
  return g;
}

std::string to_json(const ShallowNet& net) {
  nlohmann::json j;
  j["fmt"] = "relus-net-v1";
  j["s"] = net.order();
  j["d"] = net.dim();
  j["m"] = net.width();
  nlohmann::json neurons = nlohmann::json::array();
  for (const Neuron& nrn : net.neurons()) {
    nlohmann::json n;
    n["a"] = nrn.a;
    n["w"] = std::vector<double>(nrn.w.data(), nrn.w.data() + nrn.w.size());
    n["b"] = nrn.b;
    neurons.push_back(std::move(n));
  }
  j["neurons"] = std::move(neurons);
  return j.dump();
}

ShallowNet net_from_json(const std::string& text) {
  const nlohmann::json j = nlohmann::json::parse(text);
  if (!j.contains("fmt") || j.at("fmt").get<std::string>() != "relus-net-v1")
    throw std::invalid_argument("net_from_json: missing or unknown fmt tag");
  const int s = j.at("s").get<int>();
  const int d = j.at("d").get<int>();
  const int m = j.at("m").get<int>();
  std::vector<Neuron> neurons;
  for (const auto& n : j.at("neurons")) {
    Neuron nrn;
    nrn.a = n.at("a").get<double>();
    const auto wv = n.at("w").get<std::vector<double>>();
    nrn.w = Eigen::Map<const Eigen::VectorXd>(wv.data(), static_cast<Eigen::Index>(wv.size()));
    nrn.b = n.at("b").get<double>();
    neurons.push_back(std::move(nrn));
  }
  if (static_cast<int>(neurons.size()) != m)
    throw std::invalid_argument("net_from_json: width field disagrees with neuron count");
  return ShallowNet(ReluOrder(s), d, std::move(neurons));
}

}  // namespace rlab
