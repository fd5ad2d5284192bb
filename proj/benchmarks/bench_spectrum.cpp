#include <benchmark/benchmark.h>

#include "rlab/funk_hecke.hpp"
#include "rlab/zonal.hpp"

namespace {

void BM_funk_hecke_table(benchmark::State& state) {
  const int maxdeg = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlab::funk_hecke_coeff(2, 1, maxdeg));
  }
}
BENCHMARK(BM_funk_hecke_table)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_parseval_norm(benchmark::State& state) {
  rlab::ZonalSpectrum g;
  g.d = 3;
  g.coeffs.assign(static_cast<std::size_t>(state.range(0)) + 1, 0.01);
  for (auto _ : state) {
    benchmark::DoNotOptimize(rlab::parseval_norm(g));
  }
}
BENCHMARK(BM_parseval_norm)->Arg(256)->Arg(2048);

}  // namespace
