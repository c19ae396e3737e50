#include "irsim/propagation.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace irsim {

double direct_gain(double d, double L0, double d0, double alpha) {
  if (d <= d0) return 1.0;
  return 1.0 / (L0 * std::pow(d, alpha));
}

double cascaded_gain(double d1, double d2, double L0, double d0, double alpha) {
  if (d1 * d2 <= d0 * d0) return 1.0;
  return 1.0 / (L0 * L0 * std::pow(d1, alpha) * std::pow(d2, alpha));
}

cplx compose_direct(Vec3 node, Vec3 bs, cplx fading, double wavelength, const PathLoss& pl) {
  const double d = distance(node, bs);
  return std::sqrt(direct_gain(d, pl)) * fading * std::polar(1.0, -kTwoPi * d / wavelength);
}

cplx compose_irs(Vec3 node, const ElementGrid& grid, std::span<const cplx> user_irs, std::span<const cplx> irs_bs,
                 std::span<const double> phases, double rho, double wavelength, const PathLoss& pl,
                 const kernels::KernelTable& k) {
  const std::size_t n = grid.size();
  if (user_irs.size() != n || irs_bs.size() != n || phases.size() != n)
    throw std::invalid_argument("compose_irs: coefficient/phase length does not match the IRS element count");
  if (rho == 0.0) return {0.0, 0.0};

  std::vector<double> d_kn(n);
  k.distances(grid.x, grid.y, grid.z, node.x, node.y, node.z, d_kn);

  // Large-scale amplitude and net phase per element; the complex sum runs in the kernel.
  std::vector<cplx> steering(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double amp = std::sqrt(cascaded_gain(d_kn[i], grid.dist_to_bs[i], pl));
    const double path_phase = kTwoPi * (d_kn[i] + grid.dist_to_bs[i]) / wavelength;
    steering[i] = std::polar(amp, phases[i] - path_phase);
  }
  return rho * k.triple_product_sum(user_irs, irs_bs, steering);
}

ChannelSnapshot compose_channel(cplx direct, cplx irs, double tx_power) {
  ChannelSnapshot s;
  s.direct = direct;
  s.irs = irs;
  s.composite = direct + irs;
  s.rx_power = tx_power * std::norm(s.composite);
  return s;
}

double mean_reflected_power_oracle(Vec3 node, const ElementGrid& grid, double rho, const PathLoss& pl) {
  double total = 0.0;
  for (std::size_t i = 0; i < grid.size(); ++i)
    total += cascaded_gain(distance(node, grid.position(i)), grid.dist_to_bs[i], pl);
  return rho * rho * total;
}

}  // namespace irsim
