#include <benchmark/benchmark.h>

#include <cmath>

#include "sprintrt/gengamma.hpp"
#include "sprintrt/rng.hpp"
#include "sprintrt/special.hpp"

namespace {

const sprintrt::GGParams kMen{std::exp(-1.910), std::exp(-2.200), -1.178};

void BM_gg_log_density(benchmark::State& state) {
  double y = 0.12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::gengamma::log_density(kMen, y));
    y = y < 0.2 ? y + 1e-4 : 0.12;
  }
}
BENCHMARK(BM_gg_log_density);

void BM_gg_cdf(benchmark::State& state) {
  double y = 0.12;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::gengamma::cdf(kMen, y));
    y = y < 0.2 ? y + 1e-4 : 0.12;
  }
}
BENCHMARK(BM_gg_cdf);

void BM_gg_quantile(benchmark::State& state) {
  double p = 0.01;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::gengamma::quantile(kMen, p));
    p = p < 0.99 ? p + 1e-3 : 0.01;
  }
}
BENCHMARK(BM_gg_quantile);

void BM_gg_sample(benchmark::State& state) {
  sprintrt::Rng rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::gengamma::sample(kMen, rng));
  }
}
BENCHMARK(BM_gg_sample);

void BM_inv_gamma_p(benchmark::State& state) {
  double p = 0.001;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::special::inv_gamma_p(58.7, p));
    p = p < 0.999 ? p + 1e-3 : 0.001;
  }
}
BENCHMARK(BM_inv_gamma_p);

}  // namespace
