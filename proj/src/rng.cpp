#include "irsim/rng.hpp"

#include <cmath>

namespace irsim {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_label(std::string_view label) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::string_view label, std::uint64_t index) {
  std::uint64_t h = mix64(master_seed);
  h = mix64(h ^ hash_label(label));
  return mix64(h ^ index);
}

double RandomStream::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::normal() {
  if (spare_) {
    const double z = *spare_;
    spare_.reset();
    return z;
  }
  // 1 - u lies in (0, 1], keeping the log finite.
  const double u1 = 1.0 - uniform();
  const double u2 = uniform();
  const double r = std::sqrt(-2.0 * std::log(u1));
  const double theta = kTwoPi * u2;
  spare_ = r * std::sin(theta);
  return r * std::cos(theta);
}

cplx RandomStream::complex_normal() {
  const double scale = std::sqrt(0.5);
  const double re = normal();
  const double im = normal();
  return {scale * re, scale * im};
}

}  // namespace irsim
