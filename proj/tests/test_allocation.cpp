#include <doctest.h>

#include "irsim/allocation.hpp"
#include "oracles.hpp"

using namespace irsim;

namespace {
std::vector<int> assign(std::vector<double> energies, double threshold, std::vector<double> powers, int M,
                        std::vector<double>* after = nullptr) {
  ChannelEnergyLedger l{std::move(energies), threshold};
  auto a = assign_channels(l, powers, M);
  if (after) *after = l.energies;
  return a;
}
}  // namespace

TEST_CASE("initial assignment is round robin over channels") {
  CHECK(initial_assignment(10, 4) == std::vector<int>{0, 1, 2, 3, 0, 1, 2, 3, 0, 1});
  CHECK(initial_assignment(0, 3).empty());
}

TEST_CASE("first channel below threshold wins, even if another is emptier") {
  std::vector<double> e;
  const auto a = assign({4, 3}, 10, {1, 1}, 1, &e);
  CHECK(a == std::vector<int>{0, 0});
  CHECK(e == std::vector<double>{6, 3});
}

TEST_CASE("argmin fallback when every channel is busy") {
  std::vector<double> e;
  CHECK(assign({12, 11}, 10, {5}, 1, &e) == std::vector<int>{1});
  CHECK(e == std::vector<double>{12, 16});
}

TEST_CASE("argmin ties go to the lowest channel") {
  CHECK(assign({12, 12}, 10, {1}, 1) == std::vector<int>{0});
  CHECK(assign({12, 11, 11}, 10, {1}, 1) == std::vector<int>{1});
}

TEST_CASE("energy equal to the threshold is not below it") {
  CHECK(assign({10, 10.5, 9.999}, 10, {1}, 1) == std::vector<int>{2});
}

TEST_CASE("channel energies from the previous slot") {
  const int M = 128;
  const double s2 = 1e-13;
  const std::vector<int> prev{0, 0, 2};
  const std::vector<double> powers{1e-10, 2e-10, 5e-11};
  RandomStream a(3), b(3);
  NoiseEnergySampler sa, sb;
  const ChannelEnergyLedger l = init_channel_energies(a, sa, M, s2, 42.0, 3, prev, powers);
  CHECK(l.threshold == 42.0);
  REQUIRE(l.energies.size() == 3);
  // Same stream, noise drawn channel by channel.
  const double n0 = sb.draw(b, M, s2), n1 = sb.draw(b, M, s2), n2 = sb.draw(b, M, s2);
  CHECK(l.energies[0] == doctest::Approx(n0 + M * (1e-10 + 2e-10)).epsilon(1e-15));
  CHECK(l.energies[1] == n1);
  CHECK(l.energies[2] == doctest::Approx(n2 + M * 5e-11).epsilon(1e-15));
}

TEST_CASE("no noise and no occupants gives zero energy; K = 0 gives noise only") {
  RandomStream r(1);
  NoiseEnergySampler s;
  const auto l = init_channel_energies(r, s, 16, 0.0, 1.0, 3, std::vector<int>{}, std::vector<double>{});
  CHECK(l.energies == std::vector<double>{0, 0, 0});
  const auto m = init_channel_energies(r, s, 16, 1.0, 1.0, 2, std::vector<int>{}, std::vector<double>{});
  CHECK(m.energies[0] > 0.0);
  CHECK(m.energies[1] > 0.0);
}

TEST_CASE("matches the reference interpreter on random small instances") {
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int mismatches = 0;
  for (int i = 0; i < 2000; ++i) {
    const int K = 1 + static_cast<int>(gen() % 4);
    const int C = 1 + static_cast<int>(gen() % 3);
    oracle::AllocationInstance in;
    in.samples = 1 + static_cast<int>(gen() % 8);
    in.threshold = 0.5 + 3 * u(gen);
    for (int c = 0; c < C; ++c) in.noise.push_back(u(gen));
    for (int k = 0; k < K; ++k) {
      in.prev.push_back(static_cast<int>(gen() % C));
      // Coarse grid of powers so ties and exact-threshold cases occur.
      in.powers.push_back(0.125 * static_cast<double>(gen() % 5));
    }
    const auto want = oracle::allocate(in);
    ChannelEnergyLedger l;
    l.threshold = in.threshold;
    l.energies = want.initial_energy;
    const auto got = assign_channels(l, in.powers, in.samples);
    mismatches += got != want.assignment;
    for (int c = 0; c < C; ++c) mismatches += std::abs(l.energies[c] - want.final_energy[c]) > 1e-12;
  }
  CHECK(mismatches == 0);
}
