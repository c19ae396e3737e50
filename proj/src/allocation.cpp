#include "irsim/allocation.hpp"

#include <stdexcept>

namespace irsim {

std::vector<int> initial_assignment(int num_users, int num_channels) {
  std::vector<int> a(static_cast<std::size_t>(num_users));
  for (int k = 0; k < num_users; ++k) a[static_cast<std::size_t>(k)] = k % num_channels;
  return a;
}

ChannelEnergyLedger init_channel_energies(RandomStream& rng, NoiseEnergySampler& sampler, int samples,
                                          double noise_power, double threshold, int num_channels,
                                          std::span<const int> prev_assignment, std::span<const double> powers) {
  if (prev_assignment.size() != powers.size())
    throw std::invalid_argument("init_channel_energies: assignment and power vectors differ in length");
  ChannelEnergyLedger ledger;
  ledger.threshold = threshold;
  ledger.energies.resize(static_cast<std::size_t>(num_channels));
  std::vector<double> occupied(ledger.energies.size(), 0.0);
  for (std::size_t j = 0; j < powers.size(); ++j) {
    const int c = prev_assignment[j];
    if (c < 0 || c >= num_channels) throw std::out_of_range("init_channel_energies: channel index out of range");
    occupied[static_cast<std::size_t>(c)] += powers[j];
  }
  // noise + M * sum P_j, summed per channel before scaling.
  for (std::size_t c = 0; c < ledger.energies.size(); ++c)
    ledger.energies[c] = sampler.draw(rng, samples, noise_power) + samples * occupied[c];
  return ledger;
}

std::vector<int> assign_channels(ChannelEnergyLedger& ledger, std::span<const double> powers, int samples) {
  auto& e = ledger.energies;
  if (e.empty()) throw std::invalid_argument("assign_channels: no channels");
  std::vector<int> assignment(powers.size());
  for (std::size_t k = 0; k < powers.size(); ++k) {
    std::size_t chosen = e.size();
    for (std::size_t c = 0; c < e.size(); ++c) {
      if (e[c] < ledger.threshold) {
        chosen = c;
        break;
      }
    }
    if (chosen == e.size()) {
      chosen = 0;
      for (std::size_t c = 1; c < e.size(); ++c)
        if (e[c] < e[chosen]) chosen = c;
    }
    e[chosen] += samples * powers[k];
    assignment[k] = static_cast<int>(chosen);
  }
  return assignment;
}

}  // namespace irsim
