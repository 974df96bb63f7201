#pragma once

#include "sprintrt/rng.hpp"

namespace sprintrt {

// Three-parameter generalized Gamma distribution:
//
//   f(y | mu, sigma, nu) = |nu| theta^theta z^theta / (Gamma(theta) y) * exp(-z theta)
//
// with z = (y/mu)^nu and theta = 1/(sigma^2 nu^2), supported on y > 0.
// mu scales the central tendency, sigma controls dispersion, nu skewness.
// nu = 1 is the ordinary Gamma(shape 1/sigma^2, scale mu sigma^2).
struct GGParams {
  double mu;
  double sigma;
  double nu;

  double theta() const { return 1.0 / (sigma * sigma * nu * nu); }
  bool valid() const;
};

namespace gengamma {

// Throws std::invalid_argument when params are outside the domain.
void check_params(const GGParams& params);

// log f(y); y <= 0 is a domain error. Evaluated entirely in log space so
// theta up to ~1e6 does not overflow intermediates.
double log_density(const GGParams& params, double y);
double density(const GGParams& params, double y);

// P(Y <= y); returns 0 for y <= 0 (left of the support).
double cdf(const GGParams& params, double y);

// Inverse CDF on p in (0, 1); strictly increasing in p.
double quantile(const GGParams& params, double p);

// One draw: mu * (G/theta)^(1/nu) with G ~ Gamma(theta, 1).
double sample(const GGParams& params, Rng& rng);

// E[Y] = mu Gamma(theta + 1/nu) / (theta^(1/nu) Gamma(theta)),
// defined when theta > -1/nu; throws std::domain_error otherwise.
double mean(const GGParams& params);

}  // namespace gengamma

}  // namespace sprintrt
