#include "irsim/engine.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <stdexcept>
#include <string>
#include <thread>

#include "irsim/allocation.hpp"
#include "irsim/fading.hpp"
#include "irsim/irs_control.hpp"
#include "irsim/mobility.hpp"
#include "irsim/propagation.hpp"
#include "irsim/rng.hpp"
#include "irsim/scheduler.hpp"
#include "irsim/sensing.hpp"

namespace irsim {

RunResult run_simulation(const SimConfig& cfg, const kernels::KernelTable& kern) {
  const auto started = std::chrono::steady_clock::now();
  validate(cfg);
  const DerivedConstants dc = derive_constants(cfg);
  const PathLoss pl = PathLoss::from(cfg, dc);
  const FadingContext fctx{cfg.bs_position, cfg.irs_center, dc.wavelength, cfg.coherence_floor_s, cfg.slot_duration_s};

  const int K = cfg.num_nodes;
  const auto n_users = static_cast<std::size_t>(K);
  const auto n_elements = dc.irs.size();

  RandomStream position_rng(cfg.seed, streams::kPositions);
  std::vector<NodeKinematics> nodes = init_nodes(position_rng, cfg);

  RandomStream irs_bs_rng(cfg.seed, streams::kIrsBsFading);
  const StaticIrsBsFading irs_bs = draw_irs_bs_fading(irs_bs_rng, n_elements);

  std::vector<RandomStream> fading_rngs;
  std::vector<FadingState> fading;
  fading_rngs.reserve(n_users);
  fading.reserve(n_users);
  for (int k = 0; k < K; ++k) {
    fading_rngs.emplace_back(cfg.seed, streams::kNodeFading, static_cast<std::uint64_t>(k));
    fading.push_back(draw_fading(fading_rngs.back(), n_elements, 0.0));
  }

  RandomStream sensing_rng(cfg.seed, streams::kSensing);
  RandomStream scheduler_rng(cfg.seed, streams::kScheduler);
  RandomStream phase_rng(cfg.seed, streams::kPhaseControl);
  NoiseEnergySampler noise_sampler;

  // gamma depends only on sigma^2, M and P_fa, so one evaluation serves every slot.
  const double threshold = exact_threshold(dc.noise_power, cfg.sensing_samples, cfg.target_pfa);

  std::vector<int> prev_assignment = initial_assignment(K, cfg.num_channels);
  RateHistory history(K, cfg.window);
  std::vector<double> probs(n_users, 1.0 / K);

  RunResult result;
  result.config = cfg;
  result.config_hash = config_hash(cfg);
  result.trace.reserve(static_cast<std::size_t>(cfg.num_slots));

  for (int t = 1; t <= cfg.num_slots; ++t) {
    const double now = t * cfg.slot_duration_s;
    for (std::size_t k = 0; k < n_users; ++k) {
      nodes[k] = step_kinematics(nodes[k], cfg.slot_duration_s, cfg.region);
      fading[k] = update_fading(std::move(fading[k]), nodes[k], now, fctx, fading_rngs[k], kern);
    }

    FocusDecision focus = select_focus(t, cfg.window, K, probs, scheduler_rng);
    const auto star = static_cast<std::size_t>(focus.focus_user);

    PhaseProfile phases;
    switch (cfg.phase_mode) {
      case PhaseMode::geometric:
        phases = geometric_phases(nodes[star].position, dc.irs, dc.wavelength);
        break;
      case PhaseMode::csi:
        phases = csi_phases(nodes[star].position, dc.irs, dc.wavelength, fading[star].user_irs, irs_bs.coeffs);
        break;
      case PhaseMode::random:
        phases = random_phases(phase_rng, n_elements);
        break;
    }
    phases = quantize_phases(std::move(phases), cfg.phase_bits);

    SlotRecord rec;
    rec.slot = t;
    rec.focus_user = focus.focus_user;
    rec.focus_probs = std::move(focus.probs);
    rec.rx_power.resize(n_users);
    rec.irs_power.resize(n_users);
    for (std::size_t k = 0; k < n_users; ++k) {
      const cplx h_direct = compose_direct(nodes[k].position, cfg.bs_position, fading[k].direct, dc.wavelength, pl);
      const cplx h_irs = compose_irs(nodes[k].position, dc.irs, fading[k].user_irs, irs_bs.coeffs, phases.phases,
                                     cfg.reflection_efficiency, dc.wavelength, pl, kern);
      const ChannelSnapshot snap = compose_channel(h_direct, h_irs, dc.tx_power);
      rec.rx_power[k] = snap.rx_power;
      rec.irs_power[k] = std::norm(snap.irs);
    }

    rec.threshold = threshold;
    ChannelEnergyLedger ledger = init_channel_energies(sensing_rng, noise_sampler, cfg.sensing_samples,
                                                       dc.noise_power, threshold, cfg.num_channels,
                                                       prev_assignment, rec.rx_power);
    rec.assignment = assign_channels(ledger, rec.rx_power, cfg.sensing_samples);
    rec.channel_energies = std::move(ledger.energies);

    rec.sinr.resize(n_users);
    rec.rate_bps.resize(n_users);
    for (std::size_t k = 0; k < n_users; ++k) {
      rec.sinr[k] = compute_sinr(rec.rx_power, rec.assignment, static_cast<int>(k), dc.noise_power);
      rec.rate_bps[k] = compute_rate(rec.sinr[k], cfg.bandwidth_hz, dc.decode_threshold_linear);
    }

    history.push(rec.rate_bps);
    probs = sampling_probs(priority_weights(sliding_avg_rates(history), cfg.rate_epsilon, cfg.priority_exponent));
    prev_assignment = rec.assignment;
    result.trace.push_back(std::move(rec));
  }

  result.summary = summarize(result.trace, K, dc.decode_threshold_linear);
  result.wall_clock_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return result;
}

MetricStats metric_stats(std::vector<double> values) {
  MetricStats s;
  if (values.empty()) return s;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / values.size();
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.stddev = std::sqrt(ss / (values.size() - 1));
  }
  return s;
}

BatchAggregate aggregate_runs(std::span<const RunResult> runs) {
  std::vector<double> sum_rate, jain, ratio, below;
  for (const RunResult& r : runs) {
    sum_rate.push_back(r.summary.network.avg_sum_rate_bps);
    jain.push_back(r.summary.network.jain_index);
    ratio.push_back(r.summary.network.min_max_ratio);
    below.push_back(static_cast<double>(r.summary.network.below_threshold_nodes.size()));
  }
  BatchAggregate agg;
  agg.runs = runs.size();
  agg.avg_sum_rate_bps = metric_stats(std::move(sum_rate));
  agg.jain_index = metric_stats(std::move(jain));
  agg.min_max_ratio = metric_stats(std::move(ratio));
  agg.below_threshold_count = metric_stats(std::move(below));
  return agg;
}

BatchResult run_batch(const SimConfig& cfg, std::span<const std::uint64_t> seeds, unsigned threads) {
  if (seeds.empty()) throw std::invalid_argument("run_batch: seed list is empty");
  validate(cfg);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(seeds.size()));

  BatchResult batch;
  batch.runs.resize(seeds.size());
  std::vector<std::exception_ptr> errors(seeds.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < seeds.size(); i = next++) {
      try {
        SimConfig c = cfg;
        c.seed = seeds[i];
        batch.runs[i] = run_simulation(c);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < threads; ++w) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();

  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (!errors[i]) continue;
    try {
      std::rethrow_exception(errors[i]);
    } catch (const std::exception& e) {
      throw std::runtime_error("seed " + std::to_string(seeds[i]) + ": " + e.what());
    }
  }
  batch.aggregate = aggregate_runs(batch.runs);
  return batch;
}

}  // namespace irsim
