#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <optional>
#include <ostream>
#include <string>

#include "irsim/config.hpp"
#include "irsim/engine.hpp"
#include "irsim/report.hpp"
#include "irsim/selfcheck.hpp"
#include "irsim/sensing.hpp"

namespace irsim::cli {
namespace {

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw std::invalid_argument("invalid seed '" + std::string(text) + "'");
  return v;
}

struct RunFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> slots;
  std::optional<std::string> mode;
  std::string out_dir;
};

void add_common(CLI::App* cmd, RunFlags& f) {
  cmd->add_option("--config", f.config_path, "Configuration file (key = value)");
  cmd->add_option("--slots", f.slots, "Number of slots T (overrides the config)");
  cmd->add_option("--mode", f.mode, "IRS phase mode")->check(CLI::IsMember({"geometric", "csi", "random"}));
  cmd->add_option("--out", f.out_dir, "Output directory");
}

SimConfig build_config(const RunFlags& f) {
  SimConfig cfg = f.config_path.empty() ? SimConfig{} : load_config_file(f.config_path);
  apply_env_overrides(cfg);
  if (f.seed) cfg.seed = *f.seed;
  if (f.slots) cfg.num_slots = *f.slots;
  if (f.mode) cfg.phase_mode = parse_phase_mode(*f.mode);
  validate(cfg);
  return cfg;
}

int cmd_run(const RunFlags& f, std::ostream& out) {
  const SimConfig cfg = build_config(f);
  const RunResult result = run_simulation(cfg);
  report::print_tables(out, result);
  if (!f.out_dir.empty()) {
    for (const auto& path : report::write_bundle(result, f.out_dir)) out << "wrote " << path.string() << '\n';
  }
  return 0;
}

int cmd_batch(const RunFlags& f, const std::string& seed_spec, unsigned threads, std::ostream& out) {
  const SimConfig cfg = build_config(f);
  const std::vector<std::uint64_t> seeds = parse_seed_list(seed_spec);
  const BatchResult batch = run_batch(cfg, seeds, threads);
  if (!f.out_dir.empty()) {
    const std::filesystem::path root(f.out_dir);
    for (const RunResult& r : batch.runs) report::write_bundle(r, root / ("seed_" + std::to_string(r.config.seed)));
    report::write_file(root / report::kAggregateFile, report::aggregate_text(batch));
  }
  for (const RunResult& r : batch.runs) {
    char line[160];
    std::snprintf(line, sizeof line, "seed %llu: sum rate %.2f Mbps, Jain %.3f, min/max %.3f, below threshold %zu\n",
                  static_cast<unsigned long long>(r.config.seed), r.summary.network.avg_sum_rate_bps / 1e6,
                  r.summary.network.jain_index, r.summary.network.min_max_ratio,
                  r.summary.network.below_threshold_nodes.size());
    out << line;
  }
  out << report::aggregate_text(batch);
  return 0;
}

int cmd_validate(bool corrupt_quantile, std::ostream& out) {
  selfcheck::Options opt;
  opt.corrupt_quantile = corrupt_quantile;
  bool all = true;
  for (const auto& c : selfcheck::run_all(opt)) {
    out << (c.passed ? "PASS  " : "FAIL  ") << c.name << " -- " << c.detail << '\n';
    all = all && c.passed;
  }
  return all ? 0 : 1;
}

int cmd_threshold_table(const std::vector<int>& samples, const std::vector<double>& pfas, std::ostream& out) {
  out << "M,P_fa,exact_gamma_over_sigma2,gaussian_gamma_over_sigma2\n";
  for (int m : samples) {
    if (m < 1) throw std::invalid_argument("sample counts must be >= 1");
    for (double p : pfas) {
      if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("P_fa values must lie in (0, 1)");
      out << m << ',' << report::format_real(p) << ',' << report::format_real(exact_threshold(1.0, m, p)) << ','
          << report::format_real(gaussian_threshold(1.0, m, p)) << '\n';
    }
  }
  return 0;
}

}  // namespace

std::vector<std::uint64_t> parse_seed_list(std::string_view spec) {
  std::vector<std::uint64_t> seeds;
  while (!spec.empty()) {
    const auto comma = spec.find(',');
    std::string_view item = spec.substr(0, comma);
    spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const std::uint64_t lo = parse_u64(item.substr(0, dots));
      const std::uint64_t hi = parse_u64(item.substr(dots + 2));
      if (hi < lo) throw std::invalid_argument("empty seed range '" + std::string(item) + "'");
      if (hi - lo >= 1'000'000) throw std::invalid_argument("seed range too large '" + std::string(item) + "'");
      for (std::uint64_t s = lo; s <= hi; ++s) seeds.push_back(s);
    } else {
      seeds.push_back(parse_u64(item));
    }
  }
  if (seeds.empty()) throw std::invalid_argument("seed list is empty");
  return seeds;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Slot-level simulator of an IRS-assisted multi-node uplink"};
  app.name("irsim");
  app.require_subcommand(1);

  RunFlags run_flags;
  auto* run_cmd = app.add_subcommand("run", "Run one simulation and emit the output bundle");
  add_common(run_cmd, run_flags);
  run_cmd->add_option("--seed", run_flags.seed, "Master seed (default 42)");

  RunFlags batch_flags;
  std::string seed_spec;
  unsigned threads = 0;
  auto* batch_cmd = app.add_subcommand("batch", "Run one simulation per seed and aggregate the network metrics");
  add_common(batch_cmd, batch_flags);
  batch_cmd->add_option("--seeds", seed_spec, "Seeds: a..b, a,b,c or a mixture")->required();
  batch_cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");

  bool inject_fault = false;
  auto* validate_cmd = app.add_subcommand("validate", "Run the fast numerical self-check suite");
  validate_cmd->add_flag("--inject-quantile-fault", inject_fault, "Perturb the quantile under test (fault drill)");

  std::vector<int> table_samples{1, 8, 16, 32, 64, 128, 256, 1024};
  std::vector<double> table_pfas{0.01, 0.05, 0.1};
  auto* table_cmd = app.add_subcommand("threshold-table", "Print exact and Gaussian detection thresholds");
  table_cmd->add_option("--samples", table_samples, "Sample counts M")->delimiter(',');
  table_cmd->add_option("--pfa", table_pfas, "False-alarm targets")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << "run 'irsim --help' for usage\n";
    return 2;
  }

  try {
    if (*run_cmd) return cmd_run(run_flags, out);
    if (*batch_cmd) return cmd_batch(batch_flags, seed_spec, threads, out);
    if (*validate_cmd) return cmd_validate(inject_fault, out);
    if (*table_cmd) return cmd_threshold_table(table_samples, table_pfas, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace irsim::cli
