#pragma once

#include <span>
#include <vector>

#include "irsim/config.hpp"
#include "irsim/rng.hpp"

namespace irsim {

/// IRS phase shifts psi_n in [-pi, pi), one per element.
struct PhaseProfile {
  std::vector<double> phases;

  std::size_t size() const { return phases.size(); }
  friend bool operator==(const PhaseProfile&, const PhaseProfile&) = default;
};

/// Maps x into [-pi, pi); wrap(pi) = -pi.
double wrap_phase(double x);

/// Shortest angular distance between two phases, in [0, pi].
double circular_distance(double a, double b);

/// psi_n = wrap(2pi (d_{k*,n} + d_nb) / lambda)
PhaseProfile geometric_phases(Vec3 focus, const ElementGrid& grid, double wavelength);

/// Geometric phases minus the arguments of the focus user's small-scale coefficients.
PhaseProfile csi_phases(Vec3 focus, const ElementGrid& grid, double wavelength, std::span<const cplx> user_irs,
                        std::span<const cplx> irs_bs);

/// Uniform on [-pi, pi); used for control runs without alignment.
PhaseProfile random_phases(RandomStream& rng, std::size_t num_elements);

/// Nearest of the 2^b levels -pi + 2pi i / 2^b under circular distance;
/// exact ties go to the lower level index. Throws std::invalid_argument for b < 1.
PhaseProfile quantize_phases(PhaseProfile profile, int bits);

}  // namespace irsim
