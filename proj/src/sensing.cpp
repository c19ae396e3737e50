#include "irsim/sensing.hpp"

#include <cmath>
#include <stdexcept>

#include "irsim/special_functions.hpp"

namespace irsim {

double chi_square_quantile(double p, int dof) {
  if (dof < 1) throw std::domain_error("chi_square_quantile requires dof >= 1");
  return special::chi_square_quantile(p, static_cast<double>(dof));
}

double exact_threshold(double noise_power, int samples, double target_pfa) {
  if (samples < 1) throw std::domain_error("exact_threshold requires M >= 1");
  return 0.5 * noise_power * special::chi_square_upper_quantile(target_pfa, 2.0 * samples);
}

double gaussian_threshold(double noise_power, int samples, double target_pfa) {
  if (samples < 1) throw std::domain_error("gaussian_threshold requires M >= 1");
  const double z = -special::normal_quantile(target_pfa);
  const double m = static_cast<double>(samples);
  return noise_power * (m + std::sqrt(m) * z);
}

DetectorSpec make_detector(double noise_power, int samples, double target_pfa) {
  return {samples, target_pfa, noise_power, exact_threshold(noise_power, samples, target_pfa)};
}

double energy_statistic(std::span<const cplx> samples, const kernels::KernelTable& k) {
  return k.sum_norm_sq(samples);
}

double NoiseEnergySampler::draw(RandomStream& rng, int samples, double noise_power, const kernels::KernelTable& k) {
  buffer_.resize(static_cast<std::size_t>(samples));
  const double scale = std::sqrt(0.5 * noise_power);
  for (cplx& y : buffer_) {
    const double re = rng.normal();
    const double im = rng.normal();
    y = {scale * re, scale * im};
  }
  return energy_statistic(buffer_, k);
}

double draw_noise_energy(RandomStream& rng, int samples, double noise_power) {
  NoiseEnergySampler sampler;
  return sampler.draw(rng, samples, noise_power);
}

}  // namespace irsim
