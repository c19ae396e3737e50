#pragma once

#include <limits>
#include <vector>

#include "irsim/kernels/kernels.hpp"
#include "irsim/mobility.hpp"
#include "irsim/rng.hpp"

namespace irsim {

/// Small-scale state of one node: direct coefficient plus one coefficient
/// per IRS element, all sharing a single coherence clock.
struct FadingState {
  cplx direct;
  std::vector<cplx> user_irs;
  double last_redraw_time = 0.0;

  friend bool operator==(const FadingState&, const FadingState&) = default;
};

/// IRS-to-BS coefficients, drawn once per run and never modified.
struct StaticIrsBsFading {
  std::vector<cplx> coeffs;
};

inline constexpr double kNeverRedraw = std::numeric_limits<double>::infinity();

/// max(floor, 0.423 lambda / speed); infinite for a stationary node.
double coherence_time(double speed, double wavelength, double floor);

/// v . k / lambda. Throws std::invalid_argument unless |unit_dir| = 1 within 1e-9.
double doppler_shift(Vec3 velocity, Vec3 unit_dir, double wavelength);

inline cplx doppler_advance(cplx coeff, double doppler_hz, double dt) {
  return coeff * std::polar(1.0, kTwoPi * doppler_hz * dt);
}

FadingState draw_fading(RandomStream& rng, std::size_t num_elements, double now);
StaticIrsBsFading draw_irs_bs_fading(RandomStream& rng, std::size_t num_elements);

struct FadingContext {
  Vec3 bs_position;
  Vec3 irs_center;
  double wavelength = 0.0;
  double coherence_floor = 0.0;
  double slot_duration = 0.0;
};

/// Redraws everything if now - last_redraw exceeds the coherence time,
/// otherwise rotates the direct coefficient by the node->BS Doppler and all
/// user-IRS coefficients by one shared node->IRS-centre Doppler.
FadingState update_fading(FadingState state, const NodeKinematics& node, double now, const FadingContext& ctx,
                          RandomStream& rng, const kernels::KernelTable& k = kernels::active());

}  // namespace irsim
