#include "irsim/irs_control.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace irsim {

double wrap_phase(double x) {
  double r = x - kTwoPi * std::floor((x + kPi) / kTwoPi);
  // Rounding can land exactly on either end of the interval.
  if (r >= kPi) r -= kTwoPi;
  if (r < -kPi) r += kTwoPi;
  return r;
}

double circular_distance(double a, double b) { return std::abs(wrap_phase(a - b)); }

PhaseProfile geometric_phases(Vec3 focus, const ElementGrid& grid, double wavelength) {
  PhaseProfile p;
  p.phases.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double path = distance(focus, grid.position(n)) + grid.dist_to_bs[n];
    p.phases.push_back(wrap_phase(kTwoPi * path / wavelength));
  }
  return p;
}

PhaseProfile csi_phases(Vec3 focus, const ElementGrid& grid, double wavelength, std::span<const cplx> user_irs,
                        std::span<const cplx> irs_bs) {
  if (user_irs.size() != grid.size() || irs_bs.size() != grid.size())
    throw std::invalid_argument("csi_phases: coefficient length does not match the IRS element count");
  PhaseProfile p;
  p.phases.reserve(grid.size());
  for (std::size_t n = 0; n < grid.size(); ++n) {
    const double path = distance(focus, grid.position(n)) + grid.dist_to_bs[n];
    p.phases.push_back(wrap_phase(kTwoPi * path / wavelength - std::arg(user_irs[n]) - std::arg(irs_bs[n])));
  }
  return p;
}

PhaseProfile random_phases(RandomStream& rng, std::size_t num_elements) {
  PhaseProfile p;
  p.phases.reserve(num_elements);
  for (std::size_t n = 0; n < num_elements; ++n) p.phases.push_back(-kPi + kTwoPi * rng.uniform());
  return p;
}

PhaseProfile quantize_phases(PhaseProfile profile, int bits) {
  if (bits < 1 || bits > 52) throw std::invalid_argument("quantize_phases: bits must be in [1, 52]");
  const std::uint64_t levels = std::uint64_t{1} << bits;
  const double step = kTwoPi / static_cast<double>(levels);
  for (double& psi : profile.phases) {
    const double u = (wrap_phase(psi) + kPi) / step;  // in [0, levels]
    auto lower = static_cast<std::uint64_t>(std::floor(u));
    const double frac = u - static_cast<double>(lower);
    std::uint64_t index = frac > 0.5 ? lower + 1 : lower;
    // The gap above the top level wraps to level 0; a tie there also favours level 0.
    if (index >= levels || (frac == 0.5 && lower == levels - 1)) index = 0;
    psi = -kPi + step * static_cast<double>(index);
  }
  return profile;
}

}  // namespace irsim
