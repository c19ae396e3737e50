#pragma once

#include <optional>
#include <span>
#include <vector>

namespace irsim {

/// Everything observed in one slot. Users and channels are zero-based.
struct SlotRecord {
  int slot = 0;  // 1-based slot index t
  int focus_user = 0;
  std::vector<int> assignment;
  std::vector<double> sinr;       // linear
  std::vector<double> rate_bps;
  std::vector<double> rx_power;   // W
  std::vector<double> irs_power;  // |h_IRS|^2
  std::vector<double> channel_energies;  // after the assignment pass
  double threshold = 0.0;
  std::optional<std::vector<double>> focus_probs;  // distribution the focus user was drawn from

  friend bool operator==(const SlotRecord&, const SlotRecord&) = default;
};

struct NodeSummary {
  double avg_sinr_linear = 0.0;
  double avg_sinr_db = 0.0;  // -inf when every slot had zero SINR
  double avg_rate_bps = 0.0;
  double focus_fraction = 0.0;

  friend bool operator==(const NodeSummary&, const NodeSummary&) = default;
};

struct NetworkSummary {
  double avg_sum_rate_bps = 0.0;
  double jain_index = 0.0;
  double min_max_ratio = 0.0;
  std::vector<int> below_threshold_nodes;  // zero-based

  friend bool operator==(const NetworkSummary&, const NetworkSummary&) = default;
};

struct RunSummary {
  std::vector<NodeSummary> nodes;
  NetworkSummary network;

  friend bool operator==(const RunSummary&, const RunSummary&) = default;
};

/// P_k / (sum of co-channel powers of other users + sigma^2); 0 when P_k = 0.
double compute_sinr(std::span<const double> powers, std::span<const int> assignment, int user, double noise_power);

/// B log2(1 + sinr) when sinr >= the decode threshold, else 0.
double compute_rate(double sinr, double bandwidth_hz, double decode_threshold_linear);

/// 10 log10 of the linear-domain mean.
double avg_sinr_db(std::span<const double> sinr_trace);

/// (sum r)^2 / (K sum r^2); 0 when every rate is zero.
double jain_index(std::span<const double> rates);

/// min / max; 0 when the maximum is zero.
double min_max_ratio(std::span<const double> rates);

/// Spearman rank correlation with average ranks for ties. Returns 0 when
/// either input is constant.
double spearman_correlation(std::span<const double> a, std::span<const double> b);

RunSummary summarize(std::span<const SlotRecord> trace, int num_users, double decode_threshold_linear);

}  // namespace irsim
