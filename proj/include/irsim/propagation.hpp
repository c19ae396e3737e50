#pragma once

#include <span>

#include "irsim/config.hpp"
#include "irsim/kernels/kernels.hpp"

namespace irsim {

/// Large-scale model parameters: near-field clamp d0 and scaling L0.
struct PathLoss {
  double L0 = 0.0;
  double d0 = 0.0;
  double alpha = 0.0;

  static PathLoss from(const SimConfig& cfg, const DerivedConstants& d) { return {d.L0, d.d0, cfg.pathloss_exponent}; }
};

/// 1 for d <= d0, else 1 / (L0 d^alpha).
double direct_gain(double d, double L0, double d0, double alpha);

/// 1 for d1 d2 <= d0^2, else 1 / (L0^2 d1^alpha d2^alpha).
double cascaded_gain(double d1, double d2, double L0, double d0, double alpha);

inline double direct_gain(double d, const PathLoss& pl) { return direct_gain(d, pl.L0, pl.d0, pl.alpha); }
inline double cascaded_gain(double d1, double d2, const PathLoss& pl) {
  return cascaded_gain(d1, d2, pl.L0, pl.d0, pl.alpha);
}

struct ChannelSnapshot {
  cplx direct;     // h_{k,d}
  cplx irs;        // h_{k,IRS}
  cplx composite;  // h_k = direct + irs
  double rx_power = 0.0;  // P_tx |h_k|^2, W
};

/// sqrt(beta_d(d_kb)) * h * exp(-j 2pi d_kb / lambda)
cplx compose_direct(Vec3 node, Vec3 bs, cplx fading, double wavelength, const PathLoss& pl);

/// rho * sum_n sqrt(beta_12(d_kn, d_nb)) g_kn g_nb exp(-j 2pi (d_kn + d_nb) / lambda) exp(j psi_n).
/// Throws std::invalid_argument when the coefficient or phase vectors do not match the grid size.
cplx compose_irs(Vec3 node, const ElementGrid& grid, std::span<const cplx> user_irs, std::span<const cplx> irs_bs,
                 std::span<const double> phases, double rho, double wavelength, const PathLoss& pl,
                 const kernels::KernelTable& k = kernels::active());

ChannelSnapshot compose_channel(cplx direct, cplx irs, double tx_power);

/// rho^2 sum_n beta_12(d_kn, d_nb): the expected |h_IRS|^2 over independent
/// zero-mean unit-variance fading, for any fixed phase profile.
double mean_reflected_power_oracle(Vec3 node, const ElementGrid& grid, double rho, const PathLoss& pl);

}  // namespace irsim
