#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sprintrt/remixfit.hpp"

namespace sprintrt {

// Monte Carlo estimates of P(Y < t) under the fitted marginal mixture, plus
// reaction-time barriers solving P(Y < barrier) = target.
struct TailReport {
  struct ThresholdEstimate {
    double threshold;       // seconds
    double p_hat;           // estimated tail probability (or its upper bound when flagged)
    double mc_se;           // sqrt(p_hat (1 - p_hat) / n_draws)
    long one_in_n;          // round(1 / p_hat)
    bool zero_count;        // no draw fell below the threshold; p_hat is the 3/n bound
  };
  struct BarrierEstimate {
    double target_tail_prob;
    double barrier_seconds;  // rounded to 3 decimals
  };

  std::vector<ThresholdEstimate> thresholds_evaluated;
  std::vector<BarrierEstimate> barriers;
  std::size_t n_draws = 0;
  std::uint64_t seed = 0;
  std::string model_provenance;
};

// One simulation pass shared by every threshold, so estimates are monotone
// in t by construction. Requires positive thresholds and n_draws >= 1e5.
TailReport tail_probabilities(const MixedGGModel& model, const std::vector<double>& thresholds,
                              std::size_t n_draws, std::uint64_t seed);

// Empirical target-quantile of one simulated sample, rounded to 3 decimals
// (reporting precision for barriers). Requires n_draws * target >= 100.
double invert_barrier(const MixedGGModel& model, double target_tail_prob, std::size_t n_draws,
                      std::uint64_t seed);

// Unrounded quantile behind invert_barrier; the round-trip consistency
// property is stated on this value, rounding is a reporting step.
double invert_barrier_raw(const MixedGGModel& model, double target_tail_prob,
                          std::size_t n_draws, std::uint64_t seed);

// All barriers from a single simulated sample.
std::vector<TailReport::BarrierEstimate> invert_barriers(const MixedGGModel& model,
                                                         const std::vector<double>& targets,
                                                         std::size_t n_draws,
                                                         std::uint64_t seed);

}  // namespace sprintrt
