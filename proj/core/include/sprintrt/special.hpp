#pragma once

// Scalar special functions used by the distribution kernel and the fitter:
// regularized incomplete gamma (both tails, log scale, inverse), digamma,
// trigamma, and the standard normal CDF/quantile.

namespace sprintrt::special {

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
double gamma_p(double a, double x);

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double gamma_q(double a, double x);

// log P(a, x) and log Q(a, x), accurate when the tail itself underflows.
double log_gamma_p(double a, double x);
double log_gamma_q(double a, double x);

// Inverse of P(a, .): returns x with P(a, x) = p, 0 < p < 1.
double inv_gamma_p(double a, double p);

double digamma(double x);
double trigamma(double x);

// Standard normal CDF, its complement, and quantile.
double norm_cdf(double x);
double norm_sf(double x);
double norm_quantile(double p);

}  // namespace sprintrt::special
