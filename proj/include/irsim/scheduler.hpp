#pragma once

#include <optional>
#include <span>
#include <vector>

#include "irsim/rng.hpp"

namespace irsim {

/// Per-user ring buffers of the last W instantaneous rates (bit/s).
class RateHistory {
 public:
  RateHistory(int num_users, int window);

  /// Appends slot t's rates (one per user).
  void push(std::span<const double> rates);

  /// Number of slots pushed so far (t).
  int slots() const { return slots_; }
  int window() const { return window_; }
  int num_users() const { return num_users_; }

  /// min(t, W)
  int window_length() const { return slots_ < window_ ? slots_ : window_; }

  /// Stored rate of a user, age 0 = most recent slot.
  double rate(int user, int age) const;

 private:
  int num_users_;
  int window_;
  int slots_ = 0;
  std::vector<double> ring_;  // window_ rows of num_users_ rates
};

/// Mean over the stored window per user; zeros before the first push.
std::vector<double> sliding_avg_rates(const RateHistory& history);

/// w_k = (Rbar_k + eps)^-beta
std::vector<double> priority_weights(std::span<const double> avg_rates, double epsilon, double beta);

/// p_k = w_k / sum_j w_j
std::vector<double> sampling_probs(std::span<const double> weights);

struct FocusDecision {
  int focus_user = 0;                        // zero-based
  std::optional<std::vector<double>> probs;  // set only in the adaptive phase
};

/// Smallest k whose cumulative probability (in user order) exceeds u.
int sample_index(std::span<const double> probs, double u);

/// Slot t (1-based): round robin ((t-1) mod K) while t <= W, otherwise one
/// uniform draw against the probabilities formed at the end of slot t-1.
FocusDecision select_focus(int t, int window, int num_users, std::span<const double> prev_probs, RandomStream& rng);

}  // namespace irsim
