#include "sprintrt/gengamma.hpp"

#include <cmath>
#include <stdexcept>

#include "sprintrt/special.hpp"

namespace sprintrt {

bool GGParams::valid() const {
  return mu > 0.0 && sigma > 0.0 && nu != 0.0 && std::isfinite(mu) && std::isfinite(sigma) &&
         std::isfinite(nu) && std::isfinite(theta());
}

namespace gengamma {

void check_params(const GGParams& params) {
  if (!params.valid()) {
    throw std::invalid_argument("gengamma: require mu > 0, sigma > 0, nu != 0 with finite theta");
  }
}

double log_density(const GGParams& params, double y) {
  check_params(params);
  if (!(y > 0.0)) throw std::domain_error("gengamma::log_density: y must be > 0");
  const double theta = params.theta();
  const double log_y_over_mu = std::log(y) - std::log(params.mu);
  const double u = params.nu * log_y_over_mu;  // log z
  const double z_theta = std::exp(u + std::log(theta));
  return std::log(std::fabs(params.nu)) + theta * std::log(theta) + theta * u -
         std::lgamma(theta) - std::log(y) - z_theta;
}

double density(const GGParams& params, double y) {
  if (y <= 0.0) return 0.0;
  return std::exp(log_density(params, y));
}

double cdf(const GGParams& params, double y) {
  check_params(params);
  if (!(y > 0.0)) return 0.0;
  const double theta = params.theta();
  const double u = params.nu * (std::log(y) - std::log(params.mu));
  const double z_theta = std::exp(u + std::log(theta));
  // z is increasing in y for nu > 0 and decreasing for nu < 0.
  return params.nu > 0.0 ? special::gamma_p(theta, z_theta) : special::gamma_q(theta, z_theta);
}

double quantile(const GGParams& params, double p) {
  check_params(params);
  if (!(p > 0.0) || !(p < 1.0)) throw std::domain_error("gengamma::quantile: p must be in (0, 1)");
  const double theta = params.theta();
  const double gamma_prob = params.nu > 0.0 ? p : 1.0 - p;
  const double g = special::inv_gamma_p(theta, gamma_prob);
  return params.mu * std::exp(std::log(g / theta) / params.nu);
}

double sample(const GGParams& params, Rng& rng) {
  const double theta = params.theta();
  const double g = rng.gamma(theta);
  return params.mu * std::exp(std::log(g / theta) / params.nu);
}

double mean(const GGParams& params) {
  check_params(params);
  const double theta = params.theta();
  const double inv_nu = 1.0 / params.nu;
  if (!(theta > -inv_nu)) throw std::domain_error("gengamma::mean: undefined, requires theta > -1/nu");
  return params.mu *
         std::exp(std::lgamma(theta + inv_nu) - std::lgamma(theta) - inv_nu * std::log(theta));
}

}  // namespace gengamma

}  // namespace sprintrt
