#include <doctest.h>

#include <cmath>

#include "irsim/irs_control.hpp"
#include "irsim/propagation.hpp"

using namespace irsim;

TEST_CASE("wrap_phase") {
  CHECK(wrap_phase(0.0) == 0.0);
  CHECK(wrap_phase(kPi) == -kPi);
  CHECK(wrap_phase(3 * kPi) == -kPi);
  CHECK(wrap_phase(-kPi) == -kPi);
  CHECK(wrap_phase(-kPi - 1e-6) == doctest::Approx(kPi - 1e-6).epsilon(1e-12));
  CHECK(wrap_phase(std::nextafter(kPi, 0.0)) < kPi);
  CHECK(wrap_phase(-std::nextafter(kPi, 4.0)) < kPi);
  CHECK(wrap_phase(-std::nextafter(kPi, 4.0)) >= -kPi);
}

TEST_CASE("circular distance") {
  CHECK(circular_distance(0.1, -0.1) == doctest::Approx(0.2));
  CHECK(circular_distance(kPi - 0.1, -kPi + 0.1) == doctest::Approx(0.2));
  CHECK(circular_distance(0.0, kPi) == doctest::Approx(kPi));
}

TEST_CASE("quantization") {
  auto q = [](double psi, int b) { return quantize_phases(PhaseProfile{{psi}}, b).phases[0]; };
  // b = 3: levels at multiples of pi/4 from -pi; 0.3 is nearest to 0.
  CHECK(q(0.3, 3) == 0.0);
  CHECK(q(0.5, 3) == doctest::Approx(kPi / 4));
  CHECK(q(-kPi / 2, 3) == -kPi / 2);
  // Tie halfway between -pi/4 and 0 goes to the lower index level.
  CHECK(q(-kPi / 8, 3) == doctest::Approx(-kPi / 4));
  // Just below pi wraps around to level 0 (-pi), not to 3pi/4.
  CHECK(q(kPi - 0.1, 3) == -kPi);
  CHECK(q(kPi - 0.5, 3) == doctest::Approx(3 * kPi / 4));
  // b = 1: levels -pi and 0.
  CHECK(q(1.0, 1) == 0.0);
  CHECK(q(2.0, 1) == -kPi);
  CHECK(q(0.7, 16) == doctest::Approx(0.7).epsilon(kPi / 65536));
  CHECK_THROWS_AS(quantize_phases(PhaseProfile{{0.0}}, 0), std::invalid_argument);
}

TEST_CASE("geometric phases") {
  ElementGrid g;
  const double lambda = 0.1;
  // Node and BS arranged so that d_kn + d_nb = lambda for every element.
  for (int n = 0; n < 4; ++n) {
    g.x.push_back(n * 10.0);
    g.y.push_back(0);
    g.z.push_back(0);
    g.dist_to_bs.push_back(0.06);
  }
  const Vec3 node_above{0, 0, 0.04};
  const PhaseProfile p = geometric_phases(node_above, g, lambda);
  CHECK(p.phases[0] == doctest::Approx(0.0).epsilon(1e-9));
  for (double v : p.phases) {
    CHECK(v >= -kPi);
    CHECK(v < kPi);
  }
}

TEST_CASE("CSI phases cancel every summand") {
  const SimConfig cfg;
  const DerivedConstants dc = derive_constants(cfg);
  const PathLoss pl = PathLoss::from(cfg, dc);
  RandomStream rng(8);
  std::vector<cplx> g1(dc.irs.size()), g2(dc.irs.size());
  for (auto& c : g1) c = rng.complex_normal();
  for (auto& c : g2) c = rng.complex_normal();
  const Vec3 node{-20, 12, 2};

  SUBCASE("real positive coefficients reduce to geometric phases") {
    std::vector<cplx> pos(dc.irs.size(), cplx{2.0, 0.0});
    CHECK(csi_phases(node, dc.irs, dc.wavelength, pos, pos) == geometric_phases(node, dc.irs, dc.wavelength));
  }

  SUBCASE("|h_IRS| = rho * sum sqrt(beta) |g1| |g2|") {
    const PhaseProfile psi = csi_phases(node, dc.irs, dc.wavelength, g1, g2);
    const cplx h = compose_irs(node, dc.irs, g1, g2, psi.phases, 0.98, dc.wavelength, pl);
    double want = 0.0;
    for (std::size_t n = 0; n < dc.irs.size(); ++n)
      want += std::sqrt(cascaded_gain(distance(node, dc.irs.position(n)), dc.irs.dist_to_bs[n], pl)) *
              std::abs(g1[n]) * std::abs(g2[n]);
    want *= 0.98;
    CHECK(std::abs(h) == doctest::Approx(want).epsilon(1e-9));
    CHECK(h.real() > 0.0);
    CHECK(std::abs(h.imag()) < 1e-7 * want);
    for (double v : psi.phases) CHECK((v >= -kPi && v < kPi));
  }
}

TEST_CASE("random phases are in range and seeded") {
  RandomStream a(1), b(1);
  const PhaseProfile p = random_phases(a, 1000);
  CHECK(p == random_phases(b, 1000));
  for (double v : p.phases) CHECK((v >= -kPi && v < kPi));
}
