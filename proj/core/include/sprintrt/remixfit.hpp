#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sprintrt/datasets.hpp"
#include "sprintrt/gengamma.hpp"

namespace sprintrt {

struct FitConfig {
  double tol = 1e-6;
  int max_iter = 200;
  double nu_init = -1.0;
  double tau_init = 0.1;
  double tau_floor = 1e-6;  // below this a variance component is a boundary estimate
};

// Generalized Gamma model with a venue effect on log(mu) and a nested heat
// effect on log(sigma):
//   log mu_ijk    = beta0 + v_i,      v_i ~ N(0, tau_v^2)
//   log sigma_ijk = gamma0 + h_(i/j), h_(i/j) ~ N(0, tau_h^2)
// Fitted by block-coordinate ascent on the joint penalized log-likelihood.
struct MixedGGModel {
  double beta0 = 0.0;
  double gamma0 = 0.0;
  double nu = -1.0;
  std::vector<double> v;  // one per venue
  std::vector<double> h;  // one per heat, global index nested in venue
  double tau_v = 0.0;
  double tau_h = 0.0;

  double se_beta0 = 0.0;
  double se_gamma0 = 0.0;
  double se_nu = 0.0;

  double loglik_penalized = 0.0;  // penalized log-likelihood at the optimum
  bool converged = false;
  int n_iterations = 0;
  bool tau_v_boundary = false;
  bool tau_h_boundary = false;

  // Index structure carried along so the model can be simulated from and
  // serialized without the training data.
  std::vector<int> venue_years;
  std::vector<std::string> heat_ids;
  std::vector<int> venue_of_heat;
  std::size_t n_observations = 0;

  // Monotone ascent record: entry k accumulates the penalized log-likelihood
  // gain of iteration k's parameter blocks, each measured at the variance
  // components in force during that iteration (the tau updates re-weight the
  // penalty between iterations, so raw values would not be comparable).
  std::vector<double> ascent_trace;

  GGParams conditional_params(int venue, int heat) const;
};

MixedGGModel fit(const ModelDataset& data, const FitConfig& config = {});

// Normalized quantile residuals conditional on the fitted random effects.
struct ResidualSet {
  std::vector<double> z_scores;  // observation order preserved
  struct QQPair {
    double theoretical;
    double observed;
  };
  std::vector<QQPair> qq_pairs;          // sorted by theoretical quantile
  std::vector<std::size_t> clamped;      // observations whose CDF hit 0/1 numerically
};

ResidualSet quantile_residuals(const MixedGGModel& model, const ModelDataset& data);

// Correlation between the two QQ columns; 1 means a perfect straight line.
double filliben_correlation(const ResidualSet& residuals);

// Draws from the marginal scale-mixture: fresh v ~ N(0, tau_v^2) and
// h ~ N(0, tau_h^2) per draw, then GG(exp(beta0+v), exp(gamma0+h), nu).
// Deterministic in (model, n, seed) regardless of scheduling.
std::vector<double> simulate_marginal(const MixedGGModel& model, std::size_t n,
                                      std::uint64_t seed);

}  // namespace sprintrt
