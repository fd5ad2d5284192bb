#include <benchmark/benchmark.h>

#include "rlab/gegenbauer.hpp"
#include "rlab/quadrature.hpp"

namespace {

void BM_gegenbauer_eval(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  double t = -1.0;
  for (auto _ : state) {
    t += 1e-6;
    if (t > 1.0) t = -1.0;
    benchmark::DoNotOptimize(rlab::gegenbauer_eval(3, degree, t));
  }
}
BENCHMARK(BM_gegenbauer_eval)->Arg(8)->Arg(64)->Arg(512);

void BM_gegenbauer_scan(benchmark::State& state) {
  const int maxdeg = static_cast<int>(state.range(0));
  const auto& rule = rlab::gauss_jacobi(0.5, 0.5, 1024);
  for (auto _ : state) {
    rlab::GegenbauerScan scan(3, rule.nodes);
    double acc = 0.0;
    for (int i = 0; i < maxdeg; ++i) {
      scan.advance();
      acc += scan.values()[0];
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_gegenbauer_scan)->Arg(64)->Arg(512);

void BM_gauss_jacobi_lookup(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  rlab::gauss_jacobi(0.5, 0.5, n);  // warm the cache
  for (auto _ : state) {
    benchmark::DoNotOptimize(&rlab::gauss_jacobi(0.5, 0.5, n));
  }
}
BENCHMARK(BM_gauss_jacobi_lookup)->Arg(64)->Arg(256);

}  // namespace
