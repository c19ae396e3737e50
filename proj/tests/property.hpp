#pragma once

// Minimal property harness: runs a body over N generated cases and keeps the
// first counterexample. Bodies return an empty string on success.

#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>

namespace prop {

struct Outcome {
  std::string name;
  int cases = 0;
  int failures = 0;
  std::string counterexample;
  bool passed() const { return failures == 0 && cases > 0; }
};

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
  bool coin() { return integer(0, 1) == 1; }
  // Log-uniform positive value, useful for powers spanning many decades.
  double log_real(double lo, double hi) { return std::exp(real(std::log(lo), std::log(hi))); }
  std::uint64_t u64() { return engine_(); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
};

template <class Body>
Outcome check(std::string name, int cases, std::uint64_t seed, Body&& body) {
  Outcome out{std::move(name), cases, 0, {}};
  Gen gen(seed);
  for (int i = 0; i < cases; ++i) {
    std::string failure = body(gen);
    if (!failure.empty()) {
      if (out.failures++ == 0) out.counterexample = "case " + std::to_string(i) + ": " + failure;
    }
  }
  return out;
}

template <class... Args>
std::string fail(const char* fmt, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, fmt, args...);
  return buf;
}

}  // namespace prop
