#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "irsim/config.hpp"
#include "irsim/kernels/kernels.hpp"
#include "irsim/metrics.hpp"

namespace irsim {

struct RunResult {
  SimConfig config;
  std::uint64_t config_hash = 0;
  std::vector<SlotRecord> trace;  // exactly num_slots records
  RunSummary summary;
  double wall_clock_s = 0.0;  // informational; never serialized into the output bundle
};

/// Executes the slot loop: kinematics, fading, focus selection, IRS phases,
/// channels and received powers, detection threshold, channel-energy ledger,
/// sequential assignment, SINR and rate, rate-history update.
///
/// Random substreams (see rng.hpp): init-positions, fading-irs-bs,
/// fading-node/k for each node, sensing-noise, scheduler, phase-control.
RunResult run_simulation(const SimConfig& cfg, const kernels::KernelTable& k = kernels::active());

struct MetricStats {
  double mean = 0.0;
  double stddev = 0.0;  // sample standard deviation; 0 for a single run
};

struct BatchAggregate {
  std::size_t runs = 0;
  MetricStats avg_sum_rate_bps;
  MetricStats jain_index;
  MetricStats min_max_ratio;
  MetricStats below_threshold_count;
};

struct BatchResult {
  std::vector<RunResult> runs;  // same order as the requested seeds
  BatchAggregate aggregate;
};

/// Mean and sample stddev; values are sorted first so the result does not
/// depend on run order.
MetricStats metric_stats(std::vector<double> values);

BatchAggregate aggregate_runs(std::span<const RunResult> runs);

/// One independent run per seed, executed on up to `threads` workers
/// (0 = hardware concurrency). Throws std::invalid_argument for an empty
/// seed list and std::runtime_error naming the seed if any run fails.
BatchResult run_batch(const SimConfig& cfg, std::span<const std::uint64_t> seeds, unsigned threads = 0);

}  // namespace irsim
