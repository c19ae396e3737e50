#include <cmath>

#include "irsim/kernels/kernels.hpp"

namespace irsim::kernels {
namespace {

void distances_scalar(std::span<const double> xs, std::span<const double> ys, std::span<const double> zs,
                      double px, double py, double pz, std::span<double> out) {
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double dx = px - xs[n];
    const double dy = py - ys[n];
    const double dz = pz - zs[n];
    out[n] = std::sqrt((dx * dx + dy * dy) + dz * dz);
  }
}

cplx triple_product_sum_scalar(std::span<const cplx> a, std::span<const cplx> b, std::span<const cplx> c) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n) {
    const double abr = a[n].real() * b[n].real() - a[n].imag() * b[n].imag();
    const double abi = a[n].real() * b[n].imag() + a[n].imag() * b[n].real();
    re += abr * c[n].real() - abi * c[n].imag();
    im += abr * c[n].imag() + abi * c[n].real();
  }
  return {re, im};
}

double sum_norm_sq_scalar(std::span<const cplx> v) {
  double acc = 0.0;
  for (const cplx& z : v) acc += z.real() * z.real() + z.imag() * z.imag();
  return acc;
}

void rotate_scalar(std::span<cplx> v, cplx phasor) {
  const double pr = phasor.real();
  const double pi = phasor.imag();
  for (cplx& z : v) {
    const double zr = z.real();
    const double zi = z.imag();
    z = {zr * pr - zi * pi, zr * pi + zi * pr};
  }
}

}  // namespace

const KernelTable& scalar_kernels() {
  static const KernelTable table{"scalar", distances_scalar, triple_product_sum_scalar, sum_norm_sq_scalar,
                                 rotate_scalar};
  return table;
}

}  // namespace irsim::kernels
