#include "irsim/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace irsim {

double compute_sinr(std::span<const double> powers, std::span<const int> assignment, int user, double noise_power) {
  const auto k = static_cast<std::size_t>(user);
  if (powers[k] == 0.0) return 0.0;
  double interference = 0.0;
  for (std::size_t j = 0; j < powers.size(); ++j)
    if (j != k && assignment[j] == assignment[k]) interference += powers[j];
  return powers[k] / (interference + noise_power);
}

double compute_rate(double sinr, double bandwidth_hz, double decode_threshold_linear) {
  if (sinr < decode_threshold_linear) return 0.0;
  return bandwidth_hz * std::log2(1.0 + sinr);
}

double avg_sinr_db(std::span<const double> sinr_trace) {
  if (sinr_trace.empty()) throw std::invalid_argument("avg_sinr_db: empty trace");
  const double mean = std::accumulate(sinr_trace.begin(), sinr_trace.end(), 0.0) / sinr_trace.size();
  if (mean <= 0.0) return -std::numeric_limits<double>::infinity();
  return 10.0 * std::log10(mean);
}

double jain_index(std::span<const double> rates) {
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double r : rates) {
    sum += r;
    sum_sq += r * r;
  }
  if (sum_sq == 0.0) return 0.0;
  return sum * sum / (static_cast<double>(rates.size()) * sum_sq);
}

double min_max_ratio(std::span<const double> rates) {
  if (rates.empty()) return 0.0;
  const auto [lo, hi] = std::minmax_element(rates.begin(), rates.end());
  if (*hi <= 0.0) return 0.0;
  return *lo / *hi;
}

namespace {

std::vector<double> average_ranks(std::span<const double> v) {
  std::vector<std::size_t> order(v.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return v[a] < v[b]; });
  std::vector<double> ranks(v.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && v[order[j + 1]] == v[order[i]]) ++j;
    const double rank = 0.5 * static_cast<double>(i + j) + 1.0;
    for (std::size_t m = i; m <= j; ++m) ranks[order[m]] = rank;
    i = j + 1;
  }
  return ranks;
}

}  // namespace

double spearman_correlation(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("spearman_correlation: series differ in length");
  if (a.size() < 2) return 0.0;
  const auto ra = average_ranks(a);
  const auto rb = average_ranks(b);
  const double n = static_cast<double>(a.size());
  const double mean = (n + 1.0) / 2.0;
  double cov = 0.0, va = 0.0, vb = 0.0;
  for (std::size_t i = 0; i < ra.size(); ++i) {
    cov += (ra[i] - mean) * (rb[i] - mean);
    va += (ra[i] - mean) * (ra[i] - mean);
    vb += (rb[i] - mean) * (rb[i] - mean);
  }
  if (va == 0.0 || vb == 0.0) return 0.0;
  return cov / std::sqrt(va * vb);
}

RunSummary summarize(std::span<const SlotRecord> trace, int num_users, double decode_threshold_linear) {
  if (trace.empty()) throw std::invalid_argument("summarize: empty trace");
  const auto K = static_cast<std::size_t>(num_users);
  const double T = static_cast<double>(trace.size());
  RunSummary out;
  out.nodes.resize(K);

  std::vector<double> sinr_sum(K, 0.0), rate_sum(K, 0.0), focus_count(K, 0.0);
  double sum_rate_total = 0.0;
  for (const SlotRecord& s : trace) {
    double slot_sum = 0.0;
    for (std::size_t k = 0; k < K; ++k) {
      sinr_sum[k] += s.sinr[k];
      rate_sum[k] += s.rate_bps[k];
      slot_sum += s.rate_bps[k];
    }
    sum_rate_total += slot_sum;
    focus_count[static_cast<std::size_t>(s.focus_user)] += 1.0;
  }

  std::vector<double> avg_rates(K);
  for (std::size_t k = 0; k < K; ++k) {
    NodeSummary& n = out.nodes[k];
    n.avg_sinr_linear = sinr_sum[k] / T;
    n.avg_sinr_db = n.avg_sinr_linear > 0.0 ? 10.0 * std::log10(n.avg_sinr_linear)
                                            : -std::numeric_limits<double>::infinity();
    n.avg_rate_bps = rate_sum[k] / T;
    n.focus_fraction = focus_count[k] / T;
    avg_rates[k] = n.avg_rate_bps;
    if (n.avg_sinr_linear < decode_threshold_linear) out.network.below_threshold_nodes.push_back(static_cast<int>(k));
  }
  out.network.avg_sum_rate_bps = sum_rate_total / T;
  out.network.jain_index = jain_index(avg_rates);
  out.network.min_max_ratio = min_max_ratio(avg_rates);
  return out;
}

}  // namespace irsim
