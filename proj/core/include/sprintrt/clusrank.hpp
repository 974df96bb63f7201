#pragma once

#include <cstdint>
#include <stdexcept>

#include "sprintrt/datasets.hpp"

namespace sprintrt {

class DegenerateNull : public std::runtime_error {
 public:
  explicit DegenerateNull(const std::string& detail)
      : std::runtime_error("degenerate null: " + detail) {}
};

// Result of a clustered rank-sum test. S averages the pseudo-sample Wilcoxon
// statistic over all within-cluster picks; z standardizes it against null
// moments estimated by within-cluster label permutation.
struct ClusRankResult {
  double S = 0.0;
  double E0 = 0.0;
  double sd0 = 0.0;
  double z = 0.0;
  double p_asymptotic = 0.0;
  double p_permutation = 0.0;  // NaN when only the asymptotic test was run
  long n_permutations = 0;
  std::uint64_t seed = 0;
  bool degenerate = false;  // all permuted statistics identical
};

// Exact expectation of W* = 1/(n+1) + sum_i delta_i* R_i* over all
// pseudo-samples (one uniformly random pick per cluster), in closed form
// with midrank tie handling. Deterministic, no sampling.
double statistic_S(const ClusteredSample& sample);

// Two-sided permutation test: group labels are re-arranged uniformly within
// each cluster (per-cluster group counts preserved), S recomputed each time,
// p = (#{|S_b - mean| >= |S_obs - mean|} + 1) / (B + 1).
ClusRankResult permutation_test(const ClusteredSample& sample, long n_permutations,
                                std::uint64_t seed);

// Normal-approximation test with E0 and sd0 estimated from
// moment_permutations within-cluster label permutations (>= 1e4).
// Throws DegenerateNull when sd0 = 0.
ClusRankResult asymptotic_test(const ClusteredSample& sample, long moment_permutations,
                               std::uint64_t seed);

}  // namespace sprintrt
