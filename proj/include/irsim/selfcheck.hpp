#pragma once

#include <functional>
#include <string>
#include <vector>

namespace irsim::selfcheck {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  // Fault injection: perturbs the quantile under test by one part in 10^6.
  bool corrupt_quantile = false;
};

/// Fast consistency suite: quantile numerics against an independent
/// Poisson-sum CDF, detector calibration, mean reflected power Monte Carlo,
/// allocation against a reference interpreter, kernel equivalence.
std::vector<CheckResult> run_all(const Options& options = {});

/// chi-square CDF for even dof = 2m: 1 - exp(-x/2) sum_{i<m} (x/2)^i / i!.
/// Evaluated in long double, independent of the incomplete-gamma code.
double even_dof_chi_square_cdf(double x, int dof);

/// Bisection on even_dof_chi_square_cdf.
double even_dof_chi_square_quantile(double p, int dof);

}  // namespace irsim::selfcheck
