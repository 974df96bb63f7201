#include <benchmark/benchmark.h>

#include "sprintrt/remixfit.hpp"
#include "sprintrt/tailsim.hpp"

namespace {

sprintrt::MixedGGModel men_model() {
  sprintrt::MixedGGModel m;
  m.beta0 = -1.910;
  m.gamma0 = -2.200;
  m.nu = -1.178;
  m.tau_v = 0.058;
  m.tau_h = 0.320;
  return m;
}

void BM_simulate_marginal(benchmark::State& state) {
  const auto model = men_model();
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::simulate_marginal(model, n, 1));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(n));
}
BENCHMARK(BM_simulate_marginal)->Arg(100000)->Arg(1000000)->Unit(benchmark::kMillisecond);

void BM_tail_probabilities_1e6(benchmark::State& state) {
  const auto model = men_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::tail_probabilities(model, {0.08, 0.09, 0.10}, 1000000, 2));
  }
}
BENCHMARK(BM_tail_probabilities_1e6)->Unit(benchmark::kMillisecond);

}  // namespace
