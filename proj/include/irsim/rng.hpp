#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

#include "irsim/vec3.hpp"

namespace irsim {

// Stream labels used by the simulator. Each (label, index) pair owns an
// independent generator, so draws on one stream never shift another.
namespace streams {
inline constexpr std::string_view kPositions = "init-positions";
inline constexpr std::string_view kNodeFading = "fading-node";
inline constexpr std::string_view kIrsBsFading = "fading-irs-bs";
inline constexpr std::string_view kSensing = "sensing-noise";
inline constexpr std::string_view kScheduler = "scheduler";
inline constexpr std::string_view kPhaseControl = "phase-control";
}  // namespace streams

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// FNV-1a over the label bytes.
std::uint64_t hash_label(std::string_view label);

/// Seed of substream (label, index) under a master seed.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view label, std::uint64_t index);

/// Seeded random stream: std::mt19937_64 engine with explicitly specified
/// transforms, so the sequence is identical on every standard library.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(seed) {}
  RandomStream(std::uint64_t master_seed, std::string_view label, std::uint64_t index = 0)
      : engine_(derive_stream_seed(master_seed, label, index)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

  /// Standard normal via Box-Muller; the second variate of each pair is cached.
  double normal();

  /// Circularly symmetric CN(0, 1): real and imaginary parts each N(0, 1/2).
  cplx complex_normal();

 private:
  std::mt19937_64 engine_;
  std::optional<double> spare_;
};

}  // namespace irsim
