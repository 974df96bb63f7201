#include "sprintrt/clusrank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <vector>

#include "sprintrt/rng.hpp"
#include "sprintrt/special.hpp"

namespace sprintrt {

namespace {

// Per-cluster pieces of S. The expected pseudo-sample rank of each value
// depends only on the values, never on the labels, so a label permutation
// just re-selects which precomputed weights are summed.
struct ClusterWeights {
  std::vector<double> w;  // rho_ik / m_i, one per observation
  int treatment_count;
};

struct Engine {
  double constant;  // 1/(n+1)
  std::vector<ClusterWeights> clusters;

  // S for the observed labelling, summed in canonical index order so that a
  // permutation drawing the identical arrangement reproduces the identical
  // floating-point value.
  double observed;
};

// F_j(x-) + p_j(x)/2 for one cluster's sorted values.
double below_plus_half_ties(const std::vector<double>& sorted_values, double x) {
  const auto lo = std::lower_bound(sorted_values.begin(), sorted_values.end(), x);
  const auto hi = std::upper_bound(lo, sorted_values.end(), x);
  const double below = static_cast<double>(lo - sorted_values.begin());
  const double ties = static_cast<double>(hi - lo);
  return (below + 0.5 * ties) / static_cast<double>(sorted_values.size());
}

Engine build_engine(const ClusteredSample& sample) {
  const auto& clusters = sample.clusters();
  const std::size_t n = clusters.size();

  std::vector<std::vector<double>> sorted(n);
  for (std::size_t i = 0; i < n; ++i) {
    sorted[i].reserve(clusters[i].observations.size());
    for (const auto& obs : clusters[i].observations) sorted[i].push_back(obs.value);
    std::sort(sorted[i].begin(), sorted[i].end());
  }

  Engine engine;
  engine.constant = 1.0 / (static_cast<double>(n) + 1.0);
  engine.clusters.resize(n);
  double observed = engine.constant;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& obs_list = clusters[i].observations;
    const double m_i = static_cast<double>(obs_list.size());
    auto& cw = engine.clusters[i];
    cw.w.reserve(obs_list.size());
    cw.treatment_count = 0;
    for (const auto& obs : obs_list) {
      double rho = 1.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        rho += below_plus_half_ties(sorted[j], obs.value);
      }
      cw.w.push_back(rho / m_i);
    }
    double cluster_sum = 0.0;
    for (std::size_t k = 0; k < obs_list.size(); ++k) {
      if (obs_list[k].treatment) {
        cluster_sum += cw.w[k];
        ++cw.treatment_count;
      }
    }
    observed += cluster_sum;
  }
  engine.observed = observed;
  return engine;
}

// One permuted S: draws a uniformly random t-subset of each cluster's
// positions (Floyd's algorithm on a bitmask) and sums the selected weights
// in ascending index order.
double permuted_S(const Engine& engine, Rng& rng) {
  double s = engine.constant;
  for (const auto& cw : engine.clusters) {
    const std::uint64_t m = cw.w.size();
    std::uint64_t mask = 0;
    for (std::uint64_t j = m - static_cast<std::uint64_t>(cw.treatment_count); j < m; ++j) {
      const std::uint64_t r = rng.uniform_below(j + 1);
      const std::uint64_t pick = (mask >> r) & 1u ? j : r;
      mask |= std::uint64_t{1} << pick;
    }
    double cluster_sum = 0.0;
    while (mask != 0) {
      const int idx = std::countr_zero(mask);
      cluster_sum += cw.w[static_cast<std::size_t>(idx)];
      mask &= mask - 1;
    }
    s += cluster_sum;
  }
  return s;
}

constexpr std::uint64_t kBatchSize = 4096;

}  // namespace

double statistic_S(const ClusteredSample& sample) { return build_engine(sample).observed; }

ClusRankResult permutation_test(const ClusteredSample& sample, long n_permutations,
                                std::uint64_t seed) {
  if (n_permutations < 1) {
    throw std::invalid_argument("permutation_test: n_permutations must be >= 1");
  }
  const Engine engine = build_engine(sample);

  std::vector<double> stats;
  stats.reserve(static_cast<std::size_t>(n_permutations));
  for (long start = 0; start < n_permutations; start += static_cast<long>(kBatchSize)) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(start / static_cast<long>(kBatchSize)));
    const long end = std::min(n_permutations, start + static_cast<long>(kBatchSize));
    for (long b = start; b < end; ++b) stats.push_back(permuted_S(engine, rng));
  }

  double mean = 0.0;
  double stat_min = stats.front();
  double stat_max = stats.front();
  for (const double s : stats) {
    mean += s;
    stat_min = std::min(stat_min, s);
    stat_max = std::max(stat_max, s);
  }
  mean /= static_cast<double>(stats.size());
  double ss = 0.0;
  for (const double s : stats) ss += (s - mean) * (s - mean);
  const double sd = stats.size() > 1
                        ? std::sqrt(ss / static_cast<double>(stats.size() - 1))
                        : 0.0;

  ClusRankResult result;
  result.S = engine.observed;
  result.E0 = mean;
  result.sd0 = sd;
  result.n_permutations = n_permutations;
  result.seed = seed;

  if (stat_max == stat_min) {
    result.degenerate = true;
    result.z = 0.0;
    result.p_permutation = 1.0;
    result.p_asymptotic = 1.0;
    return result;
  }

  const double dev_obs = std::fabs(engine.observed - mean);
  const double tie_slack = 1e-12 * std::max(1.0, dev_obs);
  long count = 0;
  for (const double s : stats) {
    if (std::fabs(s - mean) >= dev_obs - tie_slack) ++count;
  }
  result.p_permutation =
      static_cast<double>(count + 1) / static_cast<double>(n_permutations + 1);
  result.z = (engine.observed - mean) / sd;
  result.p_asymptotic = 2.0 * special::norm_sf(std::fabs(result.z));
  return result;
}

ClusRankResult asymptotic_test(const ClusteredSample& sample, long moment_permutations,
                               std::uint64_t seed) {
  if (moment_permutations < 10000) {
    throw std::invalid_argument("asymptotic_test: moment_permutations must be >= 1e4");
  }
  const Engine engine = build_engine(sample);

  // Streaming moments; the permutation draws themselves are not kept.
  double mean = 0.0;
  double m2 = 0.0;
  long count = 0;
  double stat_min = std::numeric_limits<double>::infinity();
  double stat_max = -std::numeric_limits<double>::infinity();
  for (long start = 0; start < moment_permutations; start += static_cast<long>(kBatchSize)) {
    Rng rng = Rng::stream(seed, static_cast<std::uint64_t>(start / static_cast<long>(kBatchSize)));
    const long end = std::min(moment_permutations, start + static_cast<long>(kBatchSize));
    for (long b = start; b < end; ++b) {
      const double s = permuted_S(engine, rng);
      ++count;
      const double delta = s - mean;
      mean += delta / static_cast<double>(count);
      m2 += delta * (s - mean);
      stat_min = std::min(stat_min, s);
      stat_max = std::max(stat_max, s);
    }
  }
  const double sd = std::sqrt(std::max(0.0, m2) / static_cast<double>(count - 1));

  ClusRankResult result;
  result.S = engine.observed;
  result.E0 = mean;
  result.sd0 = sd;
  result.n_permutations = moment_permutations;
  result.seed = seed;
  result.p_permutation = std::numeric_limits<double>::quiet_NaN();
  if (stat_max == stat_min) throw DegenerateNull("all permuted statistics identical");
  result.z = (engine.observed - mean) / sd;
  result.p_asymptotic = 2.0 * special::norm_sf(std::fabs(result.z));
  return result;
}

}  // namespace sprintrt
