#include "irsim/selfcheck.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "irsim/allocation.hpp"
#include "irsim/config.hpp"
#include "irsim/kernels/kernels.hpp"
#include "irsim/propagation.hpp"
#include "irsim/rng.hpp"
#include "irsim/sensing.hpp"

namespace irsim::selfcheck {

double even_dof_chi_square_cdf(double x, int dof) {
  if (x <= 0.0) return 0.0;
  const int m = dof / 2;
  const long double y = 0.5L * x;
  // Upper tail is Poisson(y) mass below m; sum the smaller tail directly.
  long double term = 1.0L;
  long double sum = 1.0L;
  for (int i = 1; i < m; ++i) {
    term *= y / i;
    sum += term;
  }
  const long double upper = std::exp(-y) * sum;
  return static_cast<double>(1.0L - upper);
}

double even_dof_chi_square_quantile(double p, int dof) {
  double lo = 0.0;
  double hi = static_cast<double>(dof);
  while (even_dof_chi_square_cdf(hi, dof) < p) hi *= 2.0;
  for (int it = 0; it < 200 && hi - lo > 1e-15 * hi; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (even_dof_chi_square_cdf(mid, dof) < p) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

namespace {

std::string fmt(const char* f, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, f, a, b);
  return buf;
}

CheckResult check_quantile(const Options& opt) {
  const double scale = opt.corrupt_quantile ? 1.0 + 1e-6 : 1.0;
  double worst = 0.0;
  const int dofs[] = {2, 16, 256, 2048};
  const double ps[] = {0.01, 0.1, 0.5, 0.9, 0.99};
  for (int dof : dofs) {
    for (double p : ps) {
      const double got = scale * chi_square_quantile(p, dof);
      const double want = even_dof_chi_square_quantile(p, dof);
      worst = std::max(worst, std::abs(got - want) / want);
    }
  }
  const double closed = scale * chi_square_quantile(0.9, 2);
  const double closed_err = std::abs(closed + 2.0 * std::log(0.1)) / (-2.0 * std::log(0.1));
  worst = std::max(worst, closed_err);
  return {"chi-square quantile vs Poisson-sum oracle", worst <= 1e-9, fmt("max relative error %.3g (limit 1e-9)", worst)};
}

CheckResult check_calibration() {
  constexpr int kTrials = 20000;
  constexpr int kM = 128;
  constexpr double kPfa = 0.1;
  const double threshold = exact_threshold(1.0, kM, kPfa);
  RandomStream rng(0xC0FFEEULL);
  NoiseEnergySampler sampler;
  int alarms = 0;
  for (int i = 0; i < kTrials; ++i) alarms += sampler.draw(rng, kM, 1.0) > threshold;
  const double rate = static_cast<double>(alarms) / kTrials;
  const double sd = std::sqrt(kPfa * (1.0 - kPfa) / kTrials);
  return {"energy detector false-alarm calibration", std::abs(rate - kPfa) <= 3.0 * sd,
          fmt("empirical P_fa %.4f, target 0.1 +/- %.4f", rate, 3.0 * sd)};
}

CheckResult check_mean_reflected_power() {
  SimConfig cfg;
  cfg.irs_rows = 4;
  cfg.irs_cols = 4;
  const DerivedConstants dc = derive_constants(cfg);
  const PathLoss pl = PathLoss::from(cfg, dc);
  const Vec3 node{10.0, 5.0, 1.5};
  const std::size_t n = dc.irs.size();
  RandomStream rng(7);
  std::vector<double> phases(n);
  for (double& ph : phases) ph = -kPi + kTwoPi * rng.uniform();
  std::vector<cplx> g_kn(n), g_nb(n);
  constexpr int kTrials = 4000;
  double acc = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    for (auto& g : g_kn) g = rng.complex_normal();
    for (auto& g : g_nb) g = rng.complex_normal();
    acc += std::norm(compose_irs(node, dc.irs, g_kn, g_nb, phases, cfg.reflection_efficiency, dc.wavelength, pl));
  }
  const double mc = acc / kTrials;
  const double oracle = mean_reflected_power_oracle(node, dc.irs, cfg.reflection_efficiency, pl);
  const double rel = std::abs(mc - oracle) / oracle;
  return {"mean reflected power Monte Carlo (N=16, 4000 draws)", rel <= 0.10, fmt("relative error %.4f (limit 0.10)", rel)};
}

// Reference interpreter of the sensing-guided sequential assignment, written
// independently of allocation.cpp.
std::vector<int> reference_allocation(std::vector<double> energy, double gamma, int samples,
                                      const std::vector<double>& power) {
  std::vector<int> out;
  for (double p : power) {
    auto below = std::find_if(energy.begin(), energy.end(), [&](double e) { return e < gamma; });
    auto pick = below != energy.end() ? below : std::min_element(energy.begin(), energy.end());
    *pick += samples * p;
    out.push_back(static_cast<int>(pick - energy.begin()));
  }
  return out;
}

CheckResult check_allocation() {
  RandomStream gen(2024);
  int mismatches = 0;
  constexpr int kInstances = 1000;
  for (int inst = 0; inst < kInstances; ++inst) {
    const int K = 1 + static_cast<int>(gen.uniform() * 4);
    const int C = 1 + static_cast<int>(gen.uniform() * 3);
    const int M = 1 + static_cast<int>(gen.uniform() * 8);
    const double sigma2 = gen.uniform();
    const double gamma = 4.0 * M * gen.uniform() * (sigma2 + 0.1);
    std::vector<double> power(K);
    std::vector<int> prev(K);
    for (int k = 0; k < K; ++k) {
      power[k] = gen.uniform() < 0.2 ? 0.0 : gen.uniform();
      prev[k] = static_cast<int>(gen.uniform() * C);
    }
    const std::uint64_t seed = gen.next_u64();

    RandomStream impl_rng(seed);
    NoiseEnergySampler sampler;
    ChannelEnergyLedger ledger = init_channel_energies(impl_rng, sampler, M, sigma2, gamma, C, prev, power);
    const std::vector<int> got = assign_channels(ledger, power, M);

    RandomStream ref_rng(seed);
    std::vector<double> energy(C, 0.0);
    for (int c = 0; c < C; ++c) {
      double t = 0.0;
      for (int m = 0; m < M; ++m) {
        const double re = ref_rng.normal();
        const double im = ref_rng.normal();
        t += 0.5 * sigma2 * (re * re + im * im);
      }
      energy[c] = t;
    }
    for (int k = 0; k < K; ++k) energy[prev[k]] += M * power[k];
    if (reference_allocation(energy, gamma, M, power) != got) ++mismatches;
  }
  return {"allocation vs reference interpreter (1000 instances)", mismatches == 0,
          fmt("%.0f mismatches", static_cast<double>(mismatches))};
}

CheckResult check_kernels() {
  const kernels::KernelTable* simd = kernels::avx2_kernels();
  if (!simd) return {"SIMD kernels match scalar reference", true, "no SIMD kernels on this CPU; scalar only"};
  const kernels::KernelTable& ref = kernels::scalar_kernels();
  RandomStream rng(99);
  double worst = 0.0;
  bool exact = true;
  for (std::size_t n : {1u, 3u, 7u, 64u, 129u}) {
    std::vector<cplx> a(n), b(n), c(n);
    std::vector<double> xs(n), ys(n), zs(n), d1(n), d2(n);
    for (std::size_t i = 0; i < n; ++i) {
      a[i] = rng.complex_normal();
      b[i] = rng.complex_normal();
      c[i] = rng.complex_normal();
      xs[i] = rng.normal();
      ys[i] = rng.normal();
      zs[i] = rng.normal();
    }
    ref.distances(xs, ys, zs, 0.5, -1.0, 2.0, d1);
    simd->distances(xs, ys, zs, 0.5, -1.0, 2.0, d2);
    exact = exact && d1 == d2;
    const cplx s1 = ref.triple_product_sum(a, b, c);
    const cplx s2 = simd->triple_product_sum(a, b, c);
    worst = std::max(worst, std::abs(s1 - s2) / (1.0 + std::abs(s1)));
    worst = std::max(worst, std::abs(ref.sum_norm_sq(a) - simd->sum_norm_sq(a)) / ref.sum_norm_sq(a));
    std::vector<cplx> r1 = a, r2 = a;
    ref.rotate(r1, std::polar(1.0, 0.3));
    simd->rotate(r2, std::polar(1.0, 0.3));
    exact = exact && r1 == r2;
  }
  const std::string detail = std::string("elementwise ") + (exact ? "bit-identical" : "DIFFER") +
                             fmt(", reductions max rel diff %.3g", worst);
  return {"SIMD kernels match scalar reference", exact && worst <= 1e-12, detail};
}

}  // namespace

std::vector<CheckResult> run_all(const Options& options) {
  std::vector<CheckResult> out;
  out.push_back(check_quantile(options));
  out.push_back(check_calibration());
  out.push_back(check_mean_reflected_power());
  out.push_back(check_allocation());
  out.push_back(check_kernels());
  return out;
}

}  // namespace irsim::selfcheck
