#include <benchmark/benchmark.h>

#include "rlab/net.hpp"
#include "rlab/rng.hpp"

namespace {

rlab::ShallowNet make_net(int s, int d, int m) {
  rlab::Rng rng(5);
  std::vector<rlab::Neuron> neurons(m);
  for (auto& n : neurons) {
    n.a = rng.normal();
    n.w.resize(d);
    for (int k = 0; k < d; ++k) n.w[k] = rng.normal();
    n.b = rng.normal();
  }
  return rlab::ShallowNet(rlab::ReluOrder(s), d, std::move(neurons));
}

void BM_eval_batch(benchmark::State& state) {
  const auto net = make_net(1, 2, static_cast<int>(state.range(0)));
  rlab::Rng rng(9);
  std::vector<Eigen::VectorXd> xs(1024);
  for (auto& x : xs) {
    x.resize(2);
    x << rng.uniform(-1, 1), rng.uniform(-1, 1);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlab::eval_batch(net, xs));
  }
}
BENCHMARK(BM_eval_batch)->Arg(16)->Arg(64)->Arg(256);

void BM_grad_params(benchmark::State& state) {
  const auto net = make_net(2, 3, static_cast<int>(state.range(0)));
  Eigen::VectorXd x(3);
  x << 0.2, -0.4, 0.6;
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlab::grad_params(net, x));
  }
}
BENCHMARK(BM_grad_params)->Arg(16)->Arg(256);

}  // namespace
