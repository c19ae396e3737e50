#pragma once

#include <span>
#include <vector>

#include "irsim/kernels/kernels.hpp"
#include "irsim/rng.hpp"

namespace irsim {

/// Energy detector calibrated to a false-alarm target under noise only.
struct DetectorSpec {
  int samples = 0;           // M
  double target_pfa = 0.0;   // P_fa
  double noise_power = 0.0;  // sigma^2, W
  double threshold = 0.0;    // gamma
};

/// Chi-square quantile, re-exported for the detector API.
double chi_square_quantile(double p, int dof);

/// gamma = (sigma^2 / 2) F^-1_{chi2(2M)}(1 - P_fa), with the upper tail
/// inverted directly so small P_fa keeps full precision.
double exact_threshold(double noise_power, int samples, double target_pfa);

/// gamma ~ sigma^2 (M + sqrt(M) z_{1-P_fa})
double gaussian_threshold(double noise_power, int samples, double target_pfa);

DetectorSpec make_detector(double noise_power, int samples, double target_pfa);

/// T = sum |y[m]|^2
double energy_statistic(std::span<const cplx> samples, const kernels::KernelTable& k = kernels::active());

/// Energy of M iid CN(0, sigma^2) samples. Draws 2M normals regardless of sigma^2.
class NoiseEnergySampler {
 public:
  double draw(RandomStream& rng, int samples, double noise_power,
              const kernels::KernelTable& k = kernels::active());

 private:
  std::vector<cplx> buffer_;
};

double draw_noise_energy(RandomStream& rng, int samples, double noise_power);

}  // namespace irsim
