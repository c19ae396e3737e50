#include "irsim/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "irsim/config.hpp"

namespace irsim::report {

std::string format_real(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double parse_real(std::string_view text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error("not a number: '" + std::string(text) + "'");
  return v;
}

double to_db(double linear) {
  return linear > 0.0 ? 10.0 * std::log10(linear) : -std::numeric_limits<double>::infinity();
}

namespace {

int parse_int(std::string_view text) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw std::runtime_error("not an integer: '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    const auto pos = line.find(sep);
    out.push_back(line.substr(0, pos));
    if (pos == std::string_view::npos) break;
    line = line.substr(pos + 1);
  }
  return out;
}

std::string trace_header(int users) {
  std::string h = "slot,focus_user";
  for (int k = 1; k <= users; ++k) {
    const std::string n = std::to_string(k);
    h += ",channel_" + n + ",sinr_db_" + n + ",rate_bps_" + n;
  }
  return h;
}

}  // namespace

std::string trace_csv(const RunResult& run) {
  const int K = run.config.num_nodes;
  std::string out = trace_header(K) + '\n';
  for (const SlotRecord& s : run.trace) {
    out += std::to_string(s.slot) + ',' + std::to_string(s.focus_user + 1);
    for (int k = 0; k < K; ++k) {
      out += ',' + std::to_string(s.assignment[k] + 1);
      out += ',' + format_real(to_db(s.sinr[k]));
      out += ',' + format_real(s.rate_bps[k]);
    }
    out += '\n';
  }
  return out;
}

std::vector<TraceRow> parse_trace_csv(std::string_view text) {
  std::vector<TraceRow> rows;
  const auto nl = text.find('\n');
  if (nl == std::string_view::npos) throw std::runtime_error("trace: missing header");
  const auto header = split(text.substr(0, nl), ',');
  if (header.size() < 2 || (header.size() - 2) % 3 != 0) throw std::runtime_error("trace: malformed header");
  const int users = static_cast<int>((header.size() - 2) / 3);
  if (std::string(text.substr(0, nl)) != trace_header(users)) throw std::runtime_error("trace: unexpected header");
  text = text.substr(nl + 1);
  while (!text.empty()) {
    const auto end = text.find('\n');
    const std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw std::runtime_error("trace: row has the wrong number of columns");
    TraceRow r;
    r.slot = parse_int(cells[0]);
    r.focus_user = parse_int(cells[1]);
    for (int k = 0; k < users; ++k) {
      r.channel.push_back(parse_int(cells[2 + 3 * k]));
      r.sinr_db.push_back(parse_real(cells[3 + 3 * k]));
      r.rate_bps.push_back(parse_real(cells[4 + 3 * k]));
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::string nodes_csv(const RunResult& run) {
  std::string out = "node,avg_sinr_db,avg_rate_mbps,focus_percent\n";
  for (std::size_t k = 0; k < run.summary.nodes.size(); ++k) {
    const NodeSummary& n = run.summary.nodes[k];
    out += std::to_string(k + 1) + ',' + format_real(n.avg_sinr_db) + ',' + format_real(n.avg_rate_bps / 1e6) + ',' +
           format_real(100.0 * n.focus_fraction) + '\n';
  }
  return out;
}

std::string summary_text(const RunResult& run) {
  const NetworkSummary& net = run.summary.network;
  const double decode_db = run.config.decode_threshold_db;
  std::string below;
  for (std::size_t i = 0; i < net.below_threshold_nodes.size(); ++i) {
    if (i) below += ", ";
    below += std::to_string(net.below_threshold_nodes[i] + 1);
  }
  char hash[17];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(run.config_hash));

  std::string out;
  out += "# network summary\n";
  out += "seed = " + std::to_string(run.config.seed) + '\n';
  out += "config_hash = " + std::string(hash) + '\n';
  out += "phase_mode = " + std::string(to_string(run.config.phase_mode)) + '\n';
  out += "num_slots = " + std::to_string(run.trace.size()) + '\n';
  out += "num_nodes = " + std::to_string(run.config.num_nodes) + '\n';
  out += "avg_sum_rate_bps = " + format_real(net.avg_sum_rate_bps) + '\n';
  out += "jain_index = " + format_real(net.jain_index) + '\n';
  out += "min_max_rate_ratio = " + format_real(net.min_max_ratio) + '\n';
  out += "decode_threshold_db = " + format_real(decode_db) + '\n';
  out += "below_threshold_count = " + std::to_string(net.below_threshold_nodes.size()) + '\n';
  out += "below_threshold_nodes = " + below + '\n';
  return out;
}

std::string plot_sum_rate_csv(const RunResult& run) {
  std::string out = "slot,sum_rate_bps\n";
  for (const SlotRecord& s : run.trace) {
    double sum = 0.0;
    for (double r : s.rate_bps) sum += r;
    out += std::to_string(s.slot) + ',' + format_real(sum) + '\n';
  }
  return out;
}

std::string plot_node_rates_csv(const RunResult& run) {
  std::string out = "slot";
  for (int k = 1; k <= run.config.num_nodes; ++k) out += ",rate_bps_" + std::to_string(k);
  out += '\n';
  for (const SlotRecord& s : run.trace) {
    out += std::to_string(s.slot);
    for (double r : s.rate_bps) out += ',' + format_real(r);
    out += '\n';
  }
  return out;
}

std::string plot_node_sinr_focus_csv(const RunResult& run) {
  std::string out = "node,avg_sinr_db,decode_threshold_db,focus_percent\n";
  for (std::size_t k = 0; k < run.summary.nodes.size(); ++k) {
    const NodeSummary& n = run.summary.nodes[k];
    out += std::to_string(k + 1) + ',' + format_real(n.avg_sinr_db) + ',' + format_real(run.config.decode_threshold_db) +
           ',' + format_real(100.0 * n.focus_fraction) + '\n';
  }
  return out;
}

std::string aggregate_text(const BatchResult& batch) {
  const BatchAggregate& a = batch.aggregate;
  std::string seeds;
  for (std::size_t i = 0; i < batch.runs.size(); ++i) {
    if (i) seeds += ", ";
    seeds += std::to_string(batch.runs[i].config.seed);
  }
  std::string out = "# batch aggregate (mean and sample standard deviation over runs)\n";
  out += "runs = " + std::to_string(a.runs) + '\n';
  out += "seeds = " + seeds + '\n';
  auto emit = [&](const char* key, const MetricStats& s) {
    out += std::string(key) + "_mean = " + format_real(s.mean) + '\n';
    out += std::string(key) + "_stddev = " + format_real(s.stddev) + '\n';
  };
  emit("avg_sum_rate_bps", a.avg_sum_rate_bps);
  emit("jain_index", a.jain_index);
  emit("min_max_rate_ratio", a.min_max_ratio);
  emit("below_threshold_count", a.below_threshold_count);
  return out;
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

std::vector<std::filesystem::path> write_bundle(const RunResult& run, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const std::pair<std::string_view, std::string> files[] = {
      {kSummaryFile, summary_text(run)},
      {kTraceFile, trace_csv(run)},
      {kNodesFile, nodes_csv(run)},
      {kPlotSumRateFile, plot_sum_rate_csv(run)},
      {kPlotNodeRatesFile, plot_node_rates_csv(run)},
      {kPlotSinrFocusFile, plot_node_sinr_focus_csv(run)},
  };
  std::vector<std::filesystem::path> written;
  for (const auto& [name, body] : files) {
    written.push_back(dir / name);
    write_file(written.back(), body);
  }
  return written;
}

void print_tables(std::ostream& os, const RunResult& run) {
  char line[160];
  os << "Per-node statistics\n";
  std::snprintf(line, sizeof line, "%6s %14s %15s %14s\n", "Node", "Avg SINR (dB)", "Avg Rate (Mbps)", "IRS Focus (%)");
  os << line;
  for (std::size_t k = 0; k < run.summary.nodes.size(); ++k) {
    const NodeSummary& n = run.summary.nodes[k];
    std::snprintf(line, sizeof line, "%6zu %14.2f %15.2f %14.1f\n", k + 1, n.avg_sinr_db, n.avg_rate_bps / 1e6,
                  100.0 * n.focus_fraction);
    os << line;
  }
  const NetworkSummary& net = run.summary.network;
  os << "\nNetwork metrics\n";
  std::snprintf(line, sizeof line, "  Average sum rate                 %.2f Mbps\n", net.avg_sum_rate_bps / 1e6);
  os << line;
  std::snprintf(line, sizeof line, "  Jain's fairness index            %.3f\n", net.jain_index);
  os << line;
  std::snprintf(line, sizeof line, "  Min/max rate ratio               %.3f\n", net.min_max_ratio);
  os << line;
  std::string below;
  for (int k : net.below_threshold_nodes) below += (below.empty() ? "" : ", ") + std::to_string(k + 1);
  std::snprintf(line, sizeof line, "  Nodes below decode threshold     %zu%s%s%s\n", net.below_threshold_nodes.size(),
                below.empty() ? "" : " (", below.c_str(), below.empty() ? "" : ")");
  os << line;
}

}  // namespace irsim::report
