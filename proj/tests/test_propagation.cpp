#include <doctest.h>

#include <cmath>

#include "irsim/irs_control.hpp"
#include "irsim/propagation.hpp"
#include "oracles.hpp"

using namespace irsim;

namespace {
const SimConfig kCfg;
const DerivedConstants kDc = derive_constants(kCfg);
const PathLoss kPl = PathLoss::from(kCfg, kDc);
}  // namespace

TEST_CASE("direct gain") {
  CHECK(direct_gain(kDc.d0 / 2, kPl) == 1.0);
  CHECK(direct_gain(kDc.d0, kPl) == 1.0);  // clamp takes precedence at d0
  // 1 / (L0 * 100^2.2), evaluated independently in the log domain.
  CHECK(direct_gain(100.0, kPl) == doctest::Approx(1.8496331017455675e-09).epsilon(1e-12));
  CHECK(direct_gain(100.0, kPl) == doctest::Approx(oracle::direct_gain(100.0, kDc.L0, kDc.d0, 2.2)).epsilon(1e-13));
}

TEST_CASE("cascaded gain") {
  CHECK(cascaded_gain(kDc.d0 / 2, kDc.d0 / 2, kPl) == 1.0);
  CHECK(cascaded_gain(20.0, 30.0, kPl) ==
        doctest::Approx(direct_gain(20.0, kPl) * direct_gain(30.0, kPl)).epsilon(1e-13));
  CHECK(cascaded_gain(7.0, 7.0, kPl) == doctest::Approx(std::pow(direct_gain(7.0, kPl), 2)).epsilon(1e-13));
}

TEST_CASE("direct channel composition") {
  const Vec3 bs{0, 0, 10};
  const cplx near = compose_direct(bs + Vec3{0.001, 0, 0}, bs, 1.0, kDc.wavelength, kPl);
  CHECK(std::abs(near - std::exp(cplx{0, -2 * M_PI * 0.001 / kDc.wavelength})) < 1e-12);
  const cplx h{0.6, 0.8};
  const cplx a = compose_direct({40, 0, 10}, bs, h, kDc.wavelength, kPl);
  const cplx b = compose_direct({80, 0, 10}, bs, h, kDc.wavelength, kPl);
  CHECK(std::abs(a) == doctest::Approx(std::sqrt(direct_gain(40.0, kPl))).epsilon(1e-13));
  CHECK(std::norm(b) / std::norm(a) == doctest::Approx(std::pow(2.0, -2.2)).epsilon(1e-12));
}

TEST_CASE("IRS channel composition") {
  const ElementGrid& g = kDc.irs;
  const std::vector<cplx> ones(g.size(), 1.0);
  const Vec3 node{10, 5, 1};
  const std::vector<double> zero(g.size(), 0.0);
  CHECK(compose_irs(node, g, ones, ones, zero, 0.0, kDc.wavelength, kPl) == cplx{});

  SUBCASE("single element with aligned phase is real and positive") {
    ElementGrid one;
    one.x = {g.x[0]};
    one.y = {g.y[0]};
    one.z = {g.z[0]};
    one.dist_to_bs = {g.dist_to_bs[0]};
    const PhaseProfile psi = geometric_phases(node, one, kDc.wavelength);
    const cplx h = compose_irs(node, one, {ones.data(), 1}, {ones.data(), 1}, psi.phases, 0.98, kDc.wavelength, kPl);
    const double want = 0.98 * std::sqrt(cascaded_gain(distance(node, one.position(0)), one.dist_to_bs[0], kPl));
    CHECK(h.real() == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::abs(h.imag()) < 1e-7 * want);
  }

  SUBCASE("full panel equals the coherent-sum oracle") {
    const PhaseProfile psi = geometric_phases(node, g, kDc.wavelength);
    const cplx h = compose_irs(node, g, ones, ones, psi.phases, 0.98, kDc.wavelength, kPl);
    std::vector<oracle::Point> pts;
    for (std::size_t n = 0; n < g.size(); ++n) pts.push_back({g.x[n], g.y[n], g.z[n]});
    const double want = oracle::coherent_sum({10, 5, 1}, {0, 0, 10}, pts, 0.98, kDc.L0, kDc.d0, 2.2);
    CHECK(h.real() == doctest::Approx(want).epsilon(1e-9));
    CHECK(std::abs(h.imag()) < 1e-7 * want);
  }

  SUBCASE("size mismatch is rejected") {
    const std::vector<double> short_phases(g.size() - 1, 0.0);
    CHECK_THROWS_AS(compose_irs(node, g, ones, ones, short_phases, 0.98, kDc.wavelength, kPl), std::invalid_argument);
  }
}

TEST_CASE("composite channel") {
  const ChannelSnapshot s = compose_channel({1e-5, 0}, {0, 1e-5}, 0.1);
  CHECK(s.composite == cplx{1e-5, 1e-5});
  CHECK(s.rx_power == doctest::Approx(0.1 * 2e-10).epsilon(1e-14));
}

TEST_CASE("mean reflected power oracle") {
  ElementGrid one;
  one.x = {0};
  one.y = {0};
  one.z = {0};
  one.dist_to_bs = {kDc.d0 / 4};
  // N = 1, rho = 1, beta_12 = 1 (clamped)
  CHECK(mean_reflected_power_oracle({kDc.d0 / 4, 0, 0}, one, 1.0, kPl) == 1.0);

  // N = 64 replicas at the same location: 0.98^2 * 64 * beta.
  ElementGrid rep;
  for (int n = 0; n < 64; ++n) {
    rep.x.push_back(30);
    rep.y.push_back(0);
    rep.z.push_back(8);
    rep.dist_to_bs.push_back(distance({30, 0, 8}, {0, 0, 10}));
  }
  const Vec3 node{5, 5, 1};
  const double beta = cascaded_gain(distance(node, {30, 0, 8}), rep.dist_to_bs[0], kPl);
  const double v64 = mean_reflected_power_oracle(node, rep, 0.98, kPl);
  CHECK(v64 == doctest::Approx(0.9604 * 64 * beta).epsilon(1e-13));
  ElementGrid half = rep;
  for (auto* v : {&half.x, &half.y, &half.z, &half.dist_to_bs}) v->resize(32);
  CHECK(v64 == doctest::Approx(2 * mean_reflected_power_oracle(node, half, 0.98, kPl)).epsilon(1e-13));
}
