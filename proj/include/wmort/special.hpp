#pragma once

// Scalar special functions used by the likelihood and the copula layer.
// digamma/trigamma use upward recurrence onto x >= 8 followed by the
// asymptotic (Stirling) series; relative accuracy is ~1e-14 for x > 1e-4,
// verified in tests against high-order series and reflection identities.
namespace wmort::sf {

double digamma(double x);
double trigamma(double x);

// standard normal
double norm_cdf(double x);
double norm_quantile(double p);  // inverse CDF, |error| < 1e-14 after refinement
double norm_pdf(double x);

// regularized incomplete beta I_x(a, b) via Lentz continued fraction
double inc_beta(double a, double b, double x);

// Student t with nu degrees of freedom
double t_cdf(double x, double nu);
double t_pdf(double x, double nu);
double t_log_pdf(double x, double nu);
double t_quantile(double p, double nu);

}  // namespace wmort::sf
