#include <doctest.h>

#include <cmath>
#include <vector>

#include "irsim/selfcheck.hpp"
#include "irsim/sensing.hpp"
#include "irsim/special_functions.hpp"
#include "oracles.hpp"

using namespace irsim;

TEST_CASE("log gamma") {
  CHECK(special::log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(special::log_gamma(0.5) == doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
  for (double a : {0.1, 0.7, 1.5, 3.3, 9.9, 10.1, 55.5, 1024.0, 1e6})
    CHECK(special::log_gamma(a) == doctest::Approx(std::lgamma(a)).epsilon(1e-13));
}

TEST_CASE("incomplete gamma against closed forms") {
  // P(1, x) = 1 - e^{-x}
  for (double x : {1e-3, 0.5, 2.0, 10.0, 40.0}) {
    CHECK(special::regularized_gamma_p(1.0, x) == doctest::Approx(-std::expm1(-x)).epsilon(1e-14));
    CHECK(special::regularized_gamma_q(1.0, x) == doctest::Approx(std::exp(-x)).epsilon(1e-13));
  }
  // P(1/2, x) = erf(sqrt x)
  for (double x : {0.01, 0.3, 2.0, 8.0})
    CHECK(special::regularized_gamma_p(0.5, x) == doctest::Approx(std::erf(std::sqrt(x))).epsilon(1e-13));
  CHECK(special::regularized_gamma_p(3.0, 0.0) == 0.0);
  CHECK(special::regularized_gamma_q(3.0, 0.0) == 1.0);
}

TEST_CASE("chi-square quantile closed forms") {
  CHECK(chi_square_quantile(0.9, 2) == doctest::Approx(4.605170185988092).epsilon(1e-12));
  CHECK(chi_square_quantile(0.9, 2) == doctest::Approx(-2.0 * std::log(0.1)).epsilon(1e-12));
  CHECK(chi_square_quantile(0.5, 2) == doctest::Approx(1.386294361119891).epsilon(1e-12));
  CHECK(special::chi_square_quantile(0.9, 256) == doctest::Approx(285.39266666914097).epsilon(1e-10));
  CHECK_THROWS_AS(special::chi_square_quantile(0.0, 2), std::domain_error);
  CHECK_THROWS_AS(special::chi_square_quantile(1.0, 2), std::domain_error);
  CHECK_THROWS_AS(special::chi_square_quantile(0.5, 0), std::domain_error);
}

TEST_CASE("chi-square quantile against the Poisson-sum bisection oracle") {
  for (int dof : {2, 16, 256, 2048}) {
    for (double p : {0.01, 0.1, 0.5, 0.9, 0.99}) {
      const double want = oracle::chi2_quantile_even(p, dof);
      CAPTURE(dof);
      CAPTURE(p);
      CHECK(chi_square_quantile(p, dof) == doctest::Approx(want).epsilon(1e-9));
      CHECK(special::chi_square_cdf(chi_square_quantile(p, dof), dof) == doctest::Approx(p).epsilon(1e-9));
    }
  }
}

TEST_CASE("upper-tail quantile stays accurate for tiny P_fa") {
  for (int dof : {2, 16, 256}) {
    for (double q : {1e-3, 1e-6, 1e-10}) {
      CAPTURE(dof);
      CAPTURE(q);
      CHECK(special::chi_square_upper_quantile(q, dof) ==
            doctest::Approx(oracle::chi2_upper_quantile_even(q, dof)).epsilon(1e-9));
    }
  }
  CHECK(special::chi_square_upper_quantile(1e-10, 2) == doctest::Approx(-2.0 * std::log(1e-10)).epsilon(1e-12));
}

TEST_CASE("frozen quantile table (independent reference values)") {
  const double ps[] = {0.01, 0.1, 0.5, 0.9, 0.99};
  const double table[4][5] = {
      {0.020100671707002873, 0.21072103131565273, 1.386294361119891, 4.605170185988092, 9.21034037197618},
      {5.812212470134966, 9.312236353796006, 15.338498885001608, 23.541828923096105, 31.999926908815176},
      {206.31793818909574, 227.46369331642094, 255.33364285622503, 285.39266666914097, 311.56034312693504},
      {1902.061143895835, 1966.4208609980938, 2047.3333719273362, 2130.435620902911, 2199.82085258069}};
  const int dofs[] = {2, 16, 256, 2048};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) CHECK(chi_square_quantile(ps[j], dofs[i]) == doctest::Approx(table[i][j]).epsilon(1e-10));
}

TEST_CASE("normal quantile and inverse error functions") {
  CHECK(special::normal_quantile(0.9) == doctest::Approx(1.2815515655446004).epsilon(1e-13));
  CHECK(special::normal_quantile(0.5) == 0.0);
  for (double p : {1e-12, 1e-6, 0.01, 0.2, 0.7, 0.99, 1 - 1e-9})
    CHECK(special::normal_quantile(p) == doctest::Approx(oracle::normal_quantile(p)).epsilon(1e-10));
  for (double x : {-0.999, -0.5, 0.0, 1e-8, 0.3, 0.9999})
    CHECK(std::erf(special::erf_inv(x)) == doctest::Approx(x).epsilon(1e-14));
  for (double y : {1e-300, 1e-20, 0.1, 1.0, 1.7, 2 - 1e-12}) CHECK(std::erfc(special::erfc_inv(y)) == doctest::Approx(y).epsilon(1e-12));
}

TEST_CASE("thresholds") {
  const double s2 = 7.969870870303973e-14;
  CHECK(exact_threshold(s2, 1, 0.1) == doctest::Approx(s2 * 2.302585092994046).epsilon(1e-12));
  CHECK(exact_threshold(s2, 1, 0.5) == doctest::Approx(s2 * 0.6931471805599453).epsilon(1e-12));
  CHECK(exact_threshold(1.0, 128, 0.1) == doctest::Approx(142.69633333457048).epsilon(1e-11));
  CHECK(exact_threshold(1.0, 128, 0.01) == doctest::Approx(155.78017156346752).epsilon(1e-11));
  CHECK(gaussian_threshold(1.0, 128, 0.1) == doctest::Approx(142.49910083898916).epsilon(1e-12));
  CHECK(gaussian_threshold(1.0, 128, 0.5) == doctest::Approx(128.0).epsilon(1e-15));
  const double gap = std::abs(exact_threshold(1, 128, 0.1) - gaussian_threshold(1, 128, 0.1)) / exact_threshold(1, 128, 0.1);
  CHECK(gap < 0.01);
  const DetectorSpec d = make_detector(s2, 128, 0.1);
  CHECK(d.threshold == exact_threshold(s2, 128, 0.1));
  CHECK(d.samples == 128);
}

TEST_CASE("energy statistic") {
  std::vector<cplx> zeros(16);
  CHECK(energy_statistic(zeros) == 0.0);
  std::vector<cplx> unit(16);
  for (std::size_t i = 0; i < unit.size(); ++i) unit[i] = std::polar(1.0, 0.3 * i);
  CHECK(energy_statistic(unit) == doctest::Approx(16.0).epsilon(1e-14));
}

TEST_CASE("noise energy: mean and calibration") {
  RandomStream rng(17);
  NoiseEnergySampler s;
  CHECK(s.draw(rng, 128, 0.0) == 0.0);
  const double s2 = 2.5e-13;
  const double gamma = exact_threshold(s2, 128, 0.1);
  const int n = 100000;
  double sum = 0.0;
  int above = 0;
  for (int i = 0; i < n; ++i) {
    const double e = s.draw(rng, 128, s2);
    sum += e;
    above += e > gamma;
  }
  CHECK(sum / n == doctest::Approx(128 * s2).epsilon(0.02));
  CHECK(above / double(n) == doctest::Approx(0.1).epsilon(0.05));
}

TEST_CASE("self-check oracle in the library agrees with the test oracle") {
  for (int dof : {2, 16, 256})
    for (double x : {0.5 * dof, 1.0 * dof, 1.5 * dof})
      CHECK(selfcheck::even_dof_chi_square_cdf(x, dof) == doctest::Approx(oracle::chi2_cdf_even(x, dof)).epsilon(1e-13));
}

TEST_CASE("erfc_inv across the full tail") {
  for (int k = 0; k <= 300; k += 3) {
    for (double mant : {1.0, 3.7}) {
      const double y = mant * std::pow(10.0, -k);
      if (y >= 2.0) continue;
      CAPTURE(y);
      CHECK(std::erfc(special::erfc_inv(y)) == doctest::Approx(y).epsilon(1e-12));
      const double near_two = 2.0 - y * 1e-3;
      if (near_two < 2.0) CHECK(std::erfc(special::erfc_inv(near_two)) == doctest::Approx(near_two).epsilon(1e-15));
    }
  }
  CHECK_THROWS_AS(special::erfc_inv(0.0), std::domain_error);
  CHECK_THROWS_AS(special::erfc_inv(2.0), std::domain_error);
}
