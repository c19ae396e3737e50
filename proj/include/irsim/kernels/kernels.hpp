#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace irsim::kernels {

using cplx = std::complex<double>;

// Data-parallel inner loops of the simulator. Every target implements the
// same table; elementwise kernels agree bit-for-bit across targets, the
// reductions agree to rounding (summation order differs).
struct KernelTable {
  std::string_view name;

  /// out[n] = |p - (xs[n], ys[n], zs[n])|
  void (*distances)(std::span<const double> xs, std::span<const double> ys, std::span<const double> zs,
                    double px, double py, double pz, std::span<double> out);

  /// sum over n of a[n] * b[n] * c[n]
  cplx (*triple_product_sum)(std::span<const cplx> a, std::span<const cplx> b, std::span<const cplx> c);

  /// sum over n of |v[n]|^2
  double (*sum_norm_sq)(std::span<const cplx> v);

  /// v[n] *= phasor
  void (*rotate)(std::span<cplx> v, cplx phasor);
};

const KernelTable& scalar_kernels();

/// Null when the build has no AVX2 kernels or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

/// Best table for this CPU, resolved once. IRSIM_KERNELS=scalar|avx2|auto overrides.
const KernelTable& active();

}  // namespace irsim::kernels
