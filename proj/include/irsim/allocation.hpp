#pragma once

#include <span>
#include <vector>

#include "irsim/sensing.hpp"

namespace irsim {

/// Running per-channel energies for one slot's assignment pass. Channel and
/// user indices are zero-based here; reports add one.
struct ChannelEnergyLedger {
  std::vector<double> energies;
  double threshold = 0.0;
};

/// Slot-zero assignment: user k on channel k mod C.
std::vector<int> initial_assignment(int num_users, int num_channels);

/// E_c = noise draw + M * sum of current powers of users that held channel c
/// in the previous slot. Noise draws are taken in channel order.
ChannelEnergyLedger init_channel_energies(RandomStream& rng, NoiseEnergySampler& sampler, int samples,
                                          double noise_power, double threshold, int num_channels,
                                          std::span<const int> prev_assignment, std::span<const double> powers);

/// Users in index order take the first channel below threshold, else the
/// least-energy channel (lowest index on ties), then add M * P_k to it.
std::vector<int> assign_channels(ChannelEnergyLedger& ledger, std::span<const double> powers, int samples);

}  // namespace irsim
