#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "irsim/engine.hpp"

namespace irsim::report {

// Output bundle file names.
inline constexpr std::string_view kSummaryFile = "summary.txt";
inline constexpr std::string_view kTraceFile = "trace.csv";
inline constexpr std::string_view kNodesFile = "nodes.csv";
inline constexpr std::string_view kPlotSumRateFile = "plot_sum_rate.csv";
inline constexpr std::string_view kPlotNodeRatesFile = "plot_node_rates.csv";
inline constexpr std::string_view kPlotSinrFocusFile = "plot_node_sinr_focus.csv";
inline constexpr std::string_view kAggregateFile = "aggregate.txt";

/// 17 significant digits; infinities as "inf" / "-inf".
std::string format_real(double v);

/// Inverse of format_real.
double parse_real(std::string_view text);

double to_db(double linear);

/// slot, focus_user, then channel_k, sinr_db_k, rate_bps_k for every user.
/// User and channel numbers are 1-based.
std::string trace_csv(const RunResult& run);

struct TraceRow {
  int slot = 0;
  int focus_user = 0;
  std::vector<int> channel;
  std::vector<double> sinr_db;
  std::vector<double> rate_bps;

  friend bool operator==(const TraceRow&, const TraceRow&) = default;
};

/// Throws std::runtime_error on a malformed header or row.
std::vector<TraceRow> parse_trace_csv(std::string_view text);

/// node, avg_sinr_db, avg_rate_mbps, focus_percent
std::string nodes_csv(const RunResult& run);

/// Flat key = value summary with the network metrics under stable keys.
std::string summary_text(const RunResult& run);

std::string plot_sum_rate_csv(const RunResult& run);
std::string plot_node_rates_csv(const RunResult& run);
std::string plot_node_sinr_focus_csv(const RunResult& run);

std::string aggregate_text(const BatchResult& batch);

/// Writes the six bundle files into dir (created if missing); returns their paths.
std::vector<std::filesystem::path> write_bundle(const RunResult& run, const std::filesystem::path& dir);

void write_file(const std::filesystem::path& path, std::string_view contents);

/// Human-readable per-node and network tables.
void print_tables(std::ostream& os, const RunResult& run);

}  // namespace irsim::report
