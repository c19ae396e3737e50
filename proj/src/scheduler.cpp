#include "irsim/scheduler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace irsim {

RateHistory::RateHistory(int num_users, int window)
    : num_users_(num_users), window_(window), ring_(static_cast<std::size_t>(num_users) * window, 0.0) {
  if (num_users < 1 || window < 1) throw std::invalid_argument("RateHistory requires K >= 1 and W >= 1");
}

void RateHistory::push(std::span<const double> rates) {
  if (rates.size() != static_cast<std::size_t>(num_users_))
    throw std::invalid_argument("RateHistory::push: expected one rate per user");
  const std::size_t row = static_cast<std::size_t>(slots_ % window_) * num_users_;
  for (int k = 0; k < num_users_; ++k) {
    if (!(rates[k] >= 0.0)) throw std::invalid_argument("RateHistory::push: rates must be non-negative");
    ring_[row + k] = rates[k];
  }
  ++slots_;
}

double RateHistory::rate(int user, int age) const {
  if (age < 0 || age >= window_length()) throw std::out_of_range("RateHistory::rate: age outside the window");
  const int slot = slots_ - 1 - age;
  return ring_[static_cast<std::size_t>(slot % window_) * num_users_ + user];
}

std::vector<double> sliding_avg_rates(const RateHistory& history) {
  std::vector<double> avg(static_cast<std::size_t>(history.num_users()), 0.0);
  const int len = history.window_length();
  if (len == 0) return avg;
  for (int k = 0; k < history.num_users(); ++k) {
    double sum = 0.0;
    // Oldest first, matching the order of the window's slot indices.
    for (int age = len - 1; age >= 0; --age) sum += history.rate(k, age);
    avg[static_cast<std::size_t>(k)] = sum / len;
  }
  return avg;
}

std::vector<double> priority_weights(std::span<const double> avg_rates, double epsilon, double beta) {
  std::vector<double> w;
  w.reserve(avg_rates.size());
  for (double r : avg_rates) w.push_back(std::pow(r + epsilon, -beta));
  return w;
}

std::vector<double> sampling_probs(std::span<const double> weights) {
  if (weights.empty()) throw std::invalid_argument("sampling_probs: no weights");
  double total = 0.0;
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw std::invalid_argument("sampling_probs: weights must be finite and >= 0");
    total += w;
  }
  if (!(total > 0.0)) throw std::invalid_argument("sampling_probs: weights sum to zero");
  std::vector<double> p;
  p.reserve(weights.size());
  for (double w : weights) p.push_back(w / total);
  return p;
}

int sample_index(std::span<const double> probs, double u) {
  double cumulative = 0.0;
  int last_positive = 0;
  for (std::size_t k = 0; k < probs.size(); ++k) {
    if (probs[k] > 0.0) last_positive = static_cast<int>(k);
    cumulative += probs[k];
    if (u < cumulative) return static_cast<int>(k);
  }
  // Rounding left the cumulative sum just below 1.
  return last_positive;
}

FocusDecision select_focus(int t, int window, int num_users, std::span<const double> prev_probs, RandomStream& rng) {
  if (t < 1 || num_users < 1) throw std::invalid_argument("select_focus: t and K must be positive");
  FocusDecision d;
  if (t <= window) {
    d.focus_user = (t - 1) % num_users;
    return d;
  }
  if (prev_probs.size() != static_cast<std::size_t>(num_users))
    throw std::invalid_argument("select_focus: expected one probability per user");
  d.focus_user = sample_index(prev_probs, rng.uniform());
  d.probs = std::vector<double>(prev_probs.begin(), prev_probs.end());
  return d;
}

}  // namespace irsim
