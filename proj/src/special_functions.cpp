#include "irsim/special_functions.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace irsim::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kHalfLogTwoPi = 0.91893853320467274178;
constexpr double kTwoOverSqrtPi = 1.12837916709551257390;
constexpr double kSqrtPi = 1.77245385090551602730;
constexpr int kMaxSeriesTerms = 2'000'000;
constexpr int kMaxNewtonSteps = 200;

// ln Gamma(a) - [(a - 1/2) ln a - a + ln sqrt(2 pi)], valid for a >= 10.
double stirling_correction(double a) {
  static constexpr double c[] = {1.0 / 12.0,     -1.0 / 360.0, 1.0 / 1260.0, -1.0 / 1680.0,
                                 1.0 / 1188.0,   -691.0 / 360360.0, 1.0 / 156.0, -3617.0 / 122400.0};
  const double inv = 1.0 / a;
  const double inv2 = inv * inv;
  double sum = 0.0;
  double power = inv;
  for (double ci : c) {
    sum += ci * power;
    power *= inv2;
  }
  return sum;
}

// ln(x^a e^-x / Gamma(a)), the common prefactor of both tail expansions.
double log_prefactor(double a, double x) {
  if (a < 10.0) return a * std::log(x) - x - log_gamma(a);
  const double mu = (x - a) / a;
  return a * (std::log1p(mu) - mu) + 0.5 * std::log(a) - kHalfLogTwoPi - stirling_correction(a);
}

// P(a, x) by its power series; use for x < a + 1.
double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxSeriesTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) return sum * std::exp(log_prefactor(a, x));
  }
  throw NumericError("regularized_gamma_p: series did not converge for a=" + std::to_string(a));
}

// Q(a, x) by its continued fraction (modified Lentz); use for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxSeriesTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) return h * std::exp(log_prefactor(a, x));
  }
  throw NumericError("regularized_gamma_q: continued fraction did not converge for a=" + std::to_string(a));
}

void check_args(double a, double x) {
  if (!(a > 0.0) || !(x >= 0.0) || !std::isfinite(a))
    throw std::domain_error("incomplete gamma requires a > 0 and x >= 0");
}

// d/dx P(a, x)
double gamma_density(double a, double x) {
  if (x <= 0.0) return 0.0;
  return std::exp(log_prefactor(a, x)) / x;
}

// Solves P(a, y) = p (lower = true) or Q(a, y) = p (lower = false).
double inverse_regularized_gamma(double a, double target, bool lower) {
  const double p_lower = lower ? target : 1.0 - target;
  const double dof = 2.0 * a;

  // Wilson-Hilferty start, falling back to the small-x expansion P ~ y^a / Gamma(a+1).
  const double z = lower ? normal_quantile(target) : -normal_quantile(target);
  const double h = 2.0 / (9.0 * dof);
  const double cube = 1.0 - h + z * std::sqrt(h);
  double y = 0.5 * dof * cube * cube * cube;
  if (!(y > 0.0) || (dof < 4.0 && p_lower < 0.1))
    y = std::exp((std::log(p_lower) + log_gamma(a + 1.0)) / a);
  if (!(y > 0.0) || !std::isfinite(y)) y = a;

  // f(y) is increasing in y in both orientations.
  auto f = [&](double v) { return lower ? regularized_gamma_p(a, v) - target : target - regularized_gamma_q(a, v); };

  double lo = 0.0;
  double hi = std::numeric_limits<double>::infinity();
  for (int it = 0; it < kMaxNewtonSteps; ++it) {
    const double fy = f(y);
    if (fy == 0.0) return y;
    if (fy < 0.0) lo = y; else hi = y;

    const double slope = gamma_density(a, y);
    double next = slope > 0.0 ? y - fy / slope : std::numeric_limits<double>::quiet_NaN();
    if (!(next > lo && next < hi)) next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * y + 1.0;
    if (std::abs(next - y) <= 4.0 * kEps * y) return next;
    y = next;
  }
  throw NumericError("chi-square quantile: Newton iteration did not converge for dof=" + std::to_string(dof));
}

// Single-precision seed for erfinv(x) parameterized by w = -ln((1-x)(1+x)).
double erfinv_seed(double w, double x) {
  double p;
  if (w < 5.0) {
    w -= 2.5;
    p = 2.81022636e-08;
    p = 3.43273939e-07 + p * w;
    p = -3.5233877e-06 + p * w;
    p = -4.39150654e-06 + p * w;
    p = 0.00021858087 + p * w;
    p = -0.00125372503 + p * w;
    p = -0.00417768164 + p * w;
    p = 0.246640727 + p * w;
    p = 1.50140941 + p * w;
  } else {
    w = std::sqrt(w) - 3.0;
    p = -0.000200214257;
    p = 0.000100950558 + p * w;
    p = 0.00134934322 + p * w;
    p = -0.00367342844 + p * w;
    p = 0.00573950773 + p * w;
    p = -0.0076224613 + p * w;
    p = 0.00943887047 + p * w;
    p = 1.00167406 + p * w;
    p = 2.83297682 + p * w;
  }
  return p * x;
}

// Halley refinement of erf(x) = t (use_erf) or erfc(x) = t.
double refine_erf_root(double x, double t, bool use_erf) {
  for (int it = 0; it < 6; ++it) {
    const double deriv = kTwoOverSqrtPi * std::exp(-x * x);
    const double fx = use_erf ? std::erf(x) - t : std::erfc(x) - t;
    const double slope = use_erf ? deriv : -deriv;
    if (slope == 0.0 || fx == 0.0) break;
    const double delta = fx / slope;
    const double step = delta / (1.0 + x * delta);
    x -= step;
    if (std::abs(step) <= kEps * std::abs(x)) break;
  }
  return x;
}

// Newton on log erfc(x) = log t. Stays well conditioned deep in the tail,
// where erfc(x) - t is dominated by rounding.
double refine_erfc_root_log(double x, double t) {
  const double log_t = std::log(t);
  for (int it = 0; it < 60; ++it) {
    const double e = std::erfc(x);
    const double g = std::exp(-x * x);
    // d/dx log erfc(x) = -(2/sqrt(pi)) e^{-x^2} / erfc(x); asymptotic ratio once either underflows.
    const double ratio = (e > 0.0 && g > 0.0) ? g / e : x * kSqrtPi * (1.0 + 0.5 / (x * x));
    const double f = (e > 0.0 ? std::log(e) : -x * x - std::log(x * kSqrtPi)) - log_t;
    const double step = f / (-kTwoOverSqrtPi * ratio);
    x -= step;
    if (std::abs(step) <= 4.0 * kEps * std::abs(x)) break;
  }
  return x;
}

}  // namespace

double log_gamma(double a) {
  if (!(a > 0.0)) throw std::domain_error("log_gamma requires a > 0");
  double shift = 0.0;
  while (a < 10.0) {
    shift += std::log(a);
    a += 1.0;
  }
  return (a - 0.5) * std::log(a) - a + kHalfLogTwoPi + stirling_correction(a) - shift;
}

double regularized_gamma_p(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) return gamma_p_series(a, x);
  return 1.0 - gamma_q_continued_fraction(a, x);
}

double regularized_gamma_q(double a, double x) {
  check_args(a, x);
  if (x == 0.0) return 1.0;
  if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
  return gamma_q_continued_fraction(a, x);
}

double chi_square_cdf(double x, double dof) {
  if (x <= 0.0) return 0.0;
  return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double chi_square_quantile(double p, double dof) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi_square_quantile requires 0 < p < 1");
  if (!(dof > 0.0)) throw std::domain_error("chi_square_quantile requires dof > 0");
  if (p > 0.5) return 2.0 * inverse_regularized_gamma(0.5 * dof, 1.0 - p, false);
  return 2.0 * inverse_regularized_gamma(0.5 * dof, p, true);
}

double chi_square_upper_quantile(double q, double dof) {
  if (!(q > 0.0 && q < 1.0)) throw std::domain_error("chi_square_upper_quantile requires 0 < q < 1");
  if (!(dof > 0.0)) throw std::domain_error("chi_square_upper_quantile requires dof > 0");
  if (q > 0.5) return 2.0 * inverse_regularized_gamma(0.5 * dof, 1.0 - q, true);
  return 2.0 * inverse_regularized_gamma(0.5 * dof, q, false);
}

double erf_inv(double x) {
  if (!(x > -1.0 && x < 1.0)) throw std::domain_error("erf_inv requires -1 < x < 1");
  if (x == 0.0) return 0.0;
  const double ax = std::abs(x);
  const double seed = erfinv_seed(-std::log((1.0 - ax) * (1.0 + ax)), ax);
  const double root = ax <= 0.5 ? refine_erf_root(seed, ax, true) : refine_erf_root(seed, 1.0 - ax, false);
  return x < 0.0 ? -root : root;
}

double erfc_inv(double y) {
  if (!(y > 0.0 && y < 2.0)) throw std::domain_error("erfc_inv requires 0 < y < 2");
  if (y > 1.0) return -erfc_inv(2.0 - y);
  if (y >= 0.5) return erf_inv(1.0 - y);
  const double w = -std::log(y * (2.0 - y));
  double seed;
  if (w < 36.0) {
    seed = erfinv_seed(w, 1.0 - y);
  } else {
    // erfc(x) ~ e^{-x^2} / (x sqrt(pi)): a few fixed-point passes.
    seed = std::sqrt(-std::log(y));
    for (int i = 0; i < 3; ++i) seed = std::sqrt(-std::log(y * seed * kSqrtPi));
  }
  return refine_erfc_root_log(seed, y);
}

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw std::domain_error("normal_quantile requires 0 < p < 1");
  return -std::sqrt(2.0) * erfc_inv(2.0 * p);
}

}  // namespace irsim::special
