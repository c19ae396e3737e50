#pragma once

#include <stdexcept>

namespace irsim::special {

/// Iteration cap exceeded or non-finite intermediate.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// ln Gamma(a) for a > 0.
double log_gamma(double a);

/// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double regularized_gamma_p(double a, double x);

/// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x), computed without cancellation.
double regularized_gamma_q(double a, double x);

/// P(dof/2, x/2).
double chi_square_cdf(double x, double dof);

/// x with chi_square_cdf(x, dof) = p. Wilson-Hilferty start, safeguarded
/// Newton on the regularized incomplete gamma. Throws std::domain_error for
/// p outside (0, 1) or dof <= 0.
double chi_square_quantile(double p, double dof);

/// x with 1 - chi_square_cdf(x, dof) = q; accurate for small upper-tail q.
double chi_square_upper_quantile(double q, double dof);

/// Inverse error function on (-1, 1).
double erf_inv(double x);

/// Inverse complementary error function on (0, 2).
double erfc_inv(double y);

/// Standard-normal quantile, -sqrt(2) erfc_inv(2p).
double normal_quantile(double p);

}  // namespace irsim::special
