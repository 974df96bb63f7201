#include "sprintrt/tailsim.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sprintrt {

namespace {

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

double empirical_quantile(std::vector<double>& sample, double p) {
  // Type-1 (left-continuous) empirical quantile: k-th order statistic with
  // k = ceil(p n).
  const std::size_t n = sample.size();
  std::size_t k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(n)));
  if (k < 1) k = 1;
  if (k > n) k = n;
  std::nth_element(sample.begin(), sample.begin() + static_cast<std::ptrdiff_t>(k - 1),
                   sample.end());
  return sample[k - 1];
}

}  // namespace

TailReport tail_probabilities(const MixedGGModel& model, const std::vector<double>& thresholds,
                              std::size_t n_draws, std::uint64_t seed) {
  for (const double t : thresholds) {
    if (!(t > 0.0)) throw std::invalid_argument("tail_probabilities: thresholds must be positive");
  }
  if (n_draws < 100000) {
    throw std::invalid_argument("tail_probabilities: n_draws must be >= 1e5");
  }

  const std::vector<double> draws = simulate_marginal(model, n_draws, seed);

  TailReport report;
  report.n_draws = n_draws;
  report.seed = seed;
  report.thresholds_evaluated.reserve(thresholds.size());
  const double n = static_cast<double>(n_draws);
  for (const double t : thresholds) {
    std::size_t count = 0;
    for (const double y : draws) {
      if (y < t) ++count;
    }
    TailReport::ThresholdEstimate est;
    est.threshold = t;
    est.zero_count = count == 0;
    // Rule-of-three upper bound instead of an impossible exact zero.
    est.p_hat = est.zero_count ? 3.0 / n : static_cast<double>(count) / n;
    est.mc_se = std::sqrt(est.p_hat * (1.0 - est.p_hat) / n);
    est.one_in_n = est.p_hat > 0.0 ? std::lround(1.0 / est.p_hat) : 0;
    report.thresholds_evaluated.push_back(est);
  }
  return report;
}

double invert_barrier_raw(const MixedGGModel& model, double target_tail_prob,
                          std::size_t n_draws, std::uint64_t seed) {
  if (!(target_tail_prob > 0.0) || !(target_tail_prob < 1.0)) {
    throw std::invalid_argument("invert_barrier: target probability must be in (0, 1)");
  }
  if (static_cast<double>(n_draws) * target_tail_prob < 100.0) {
    throw std::invalid_argument("insufficient draws for target probability");
  }
  std::vector<double> draws = simulate_marginal(model, n_draws, seed);
  return empirical_quantile(draws, target_tail_prob);
}

double invert_barrier(const MixedGGModel& model, double target_tail_prob, std::size_t n_draws,
                      std::uint64_t seed) {
  return round3(invert_barrier_raw(model, target_tail_prob, n_draws, seed));
}

std::vector<TailReport::BarrierEstimate> invert_barriers(const MixedGGModel& model,
                                                         const std::vector<double>& targets,
                                                         std::size_t n_draws,
                                                         std::uint64_t seed) {
  for (const double p : targets) {
    if (!(p > 0.0) || !(p < 1.0)) {
      throw std::invalid_argument("invert_barrier: target probability must be in (0, 1)");
    }
    if (static_cast<double>(n_draws) * p < 100.0) {
      throw std::invalid_argument("insufficient draws for target probability");
    }
  }
  std::vector<double> draws = simulate_marginal(model, n_draws, seed);
  std::sort(draws.begin(), draws.end());
  std::vector<TailReport::BarrierEstimate> barriers;
  barriers.reserve(targets.size());
  for (const double p : targets) {
    std::size_t k = static_cast<std::size_t>(std::ceil(p * static_cast<double>(draws.size())));
    k = std::clamp<std::size_t>(k, 1, draws.size());
    barriers.push_back({p, round3(draws[k - 1])});
  }
  return barriers;
}

}  // namespace sprintrt
