#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "sprintrt/clusrank.hpp"
#include "sprintrt/rng.hpp"

namespace {

sprintrt::ClusteredSample synthetic_sample(int n_clusters, std::uint64_t seed) {
  sprintrt::Rng rng(seed);
  std::vector<sprintrt::Cluster> clusters;
  for (int i = 0; i < n_clusters; ++i) {
    sprintrt::Cluster cluster;
    cluster.athlete_id = "a" + std::to_string(i);
    const int m = 3 + static_cast<int>(rng.uniform_below(4));
    const int t = 1 + static_cast<int>(rng.uniform_below(static_cast<std::uint64_t>(m - 1)));
    for (int k = 0; k < m; ++k) {
      cluster.observations.push_back({0.12 + 0.05 * rng.uniform(), k < t});
    }
    clusters.push_back(std::move(cluster));
  }
  return sprintrt::ClusteredSample::from_clusters(std::move(clusters));
}

void BM_statistic_S(benchmark::State& state) {
  const auto sample = synthetic_sample(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::statistic_S(sample));
  }
}
BENCHMARK(BM_statistic_S)->Arg(17)->Arg(47)->Arg(100);

void BM_permutation_test_10k(benchmark::State& state) {
  const auto sample = synthetic_sample(static_cast<int>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sprintrt::permutation_test(sample, 10000, 42));
  }
}
BENCHMARK(BM_permutation_test_10k)->Arg(17)->Arg(47)->Unit(benchmark::kMillisecond);

}  // namespace
