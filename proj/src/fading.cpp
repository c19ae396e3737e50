#include "irsim/fading.hpp"

#include <cmath>
#include <stdexcept>

namespace irsim {

double coherence_time(double speed, double wavelength, double floor) {
  if (speed <= 0.0) return kNeverRedraw;
  const double max_doppler = speed / wavelength;
  return std::max(floor, 0.423 / max_doppler);
}

double doppler_shift(Vec3 velocity, Vec3 unit_dir, double wavelength) {
  if (std::abs(norm(unit_dir) - 1.0) > 1e-9) throw std::invalid_argument("doppler_shift: direction is not a unit vector");
  return dot(velocity, unit_dir) / wavelength;
}

FadingState draw_fading(RandomStream& rng, std::size_t num_elements, double now) {
  FadingState s;
  s.direct = rng.complex_normal();
  s.user_irs.resize(num_elements);
  for (cplx& g : s.user_irs) g = rng.complex_normal();
  s.last_redraw_time = now;
  return s;
}

StaticIrsBsFading draw_irs_bs_fading(RandomStream& rng, std::size_t num_elements) {
  StaticIrsBsFading f;
  f.coeffs.resize(num_elements);
  for (cplx& g : f.coeffs) g = rng.complex_normal();
  return f;
}

namespace {

double doppler_towards(const NodeKinematics& node, Vec3 target, double wavelength) {
  const Vec3 delta = target - node.position;
  const double len = norm(delta);
  if (len == 0.0) return 0.0;
  return doppler_shift(node.velocity, (1.0 / len) * delta, wavelength);
}

}  // namespace

FadingState update_fading(FadingState state, const NodeKinematics& node, double now, const FadingContext& ctx,
                          RandomStream& rng, const kernels::KernelTable& k) {
  const double t_coh = coherence_time(norm(node.velocity), ctx.wavelength, ctx.coherence_floor);
  if (now - state.last_redraw_time > t_coh) return draw_fading(rng, state.user_irs.size(), now);

  const double f_direct = doppler_towards(node, ctx.bs_position, ctx.wavelength);
  const double f_irs = doppler_towards(node, ctx.irs_center, ctx.wavelength);
  if (f_direct != 0.0) state.direct = doppler_advance(state.direct, f_direct, ctx.slot_duration);
  if (f_irs != 0.0) k.rotate(state.user_irs, std::polar(1.0, kTwoPi * f_irs * ctx.slot_duration));
  return state;
}

}  // namespace irsim
