// AVX2 variants of the kernel table. Built with -mavx2 only (no FMA) so the
// elementwise kernels round exactly like the scalar reference.
#include <immintrin.h>

#include <cmath>

#include "irsim/kernels/kernels.hpp"

namespace irsim::kernels {
namespace {

inline const double* as_doubles(const cplx* p) { return reinterpret_cast<const double*>(p); }
inline double* as_doubles(cplx* p) { return reinterpret_cast<double*>(p); }

// [ar, ai, ...] * [br, bi, ...] for two packed complex values.
inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_swap = _mm256_permute_pd(a, 0x5);
  return _mm256_addsub_pd(_mm256_mul_pd(a, b_re), _mm256_mul_pd(a_swap, b_im));
}

void distances_avx2(std::span<const double> xs, std::span<const double> ys, std::span<const double> zs,
                    double px, double py, double pz, std::span<double> out) {
  const std::size_t n_total = out.size();
  const __m256d vx = _mm256_set1_pd(px);
  const __m256d vy = _mm256_set1_pd(py);
  const __m256d vz = _mm256_set1_pd(pz);
  std::size_t n = 0;
  for (; n + 4 <= n_total; n += 4) {
    const __m256d dx = _mm256_sub_pd(vx, _mm256_loadu_pd(xs.data() + n));
    const __m256d dy = _mm256_sub_pd(vy, _mm256_loadu_pd(ys.data() + n));
    const __m256d dz = _mm256_sub_pd(vz, _mm256_loadu_pd(zs.data() + n));
    const __m256d sq = _mm256_add_pd(_mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy)),
                                     _mm256_mul_pd(dz, dz));
    _mm256_storeu_pd(out.data() + n, _mm256_sqrt_pd(sq));
  }
  for (; n < n_total; ++n) {
    const double dx = px - xs[n];
    const double dy = py - ys[n];
    const double dz = pz - zs[n];
    out[n] = std::sqrt((dx * dx + dy * dy) + dz * dz);
  }
}

cplx triple_product_sum_avx2(std::span<const cplx> a, std::span<const cplx> b, std::span<const cplx> c) {
  const std::size_t n_total = a.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t n = 0;
  for (; n + 4 <= n_total; n += 4) {
    const __m256d p0 = cmul(cmul(_mm256_loadu_pd(as_doubles(a.data() + n)), _mm256_loadu_pd(as_doubles(b.data() + n))),
                            _mm256_loadu_pd(as_doubles(c.data() + n)));
    const __m256d p1 =
        cmul(cmul(_mm256_loadu_pd(as_doubles(a.data() + n + 2)), _mm256_loadu_pd(as_doubles(b.data() + n + 2))),
             _mm256_loadu_pd(as_doubles(c.data() + n + 2)));
    acc0 = _mm256_add_pd(acc0, p0);
    acc1 = _mm256_add_pd(acc1, p1);
  }
  for (; n + 2 <= n_total; n += 2) {
    acc0 = _mm256_add_pd(
        acc0, cmul(cmul(_mm256_loadu_pd(as_doubles(a.data() + n)), _mm256_loadu_pd(as_doubles(b.data() + n))),
                   _mm256_loadu_pd(as_doubles(c.data() + n))));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double re = _mm_cvtsd_f64(folded);
  double im = _mm_cvtsd_f64(_mm_unpackhi_pd(folded, folded));
  for (; n < n_total; ++n) {
    const double abr = a[n].real() * b[n].real() - a[n].imag() * b[n].imag();
    const double abi = a[n].real() * b[n].imag() + a[n].imag() * b[n].real();
    re += abr * c[n].real() - abi * c[n].imag();
    im += abr * c[n].imag() + abi * c[n].real();
  }
  return {re, im};
}

double sum_norm_sq_avx2(std::span<const cplx> v) {
  const double* d = as_doubles(v.data());
  const std::size_t len = 2 * v.size();
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    const __m256d x0 = _mm256_loadu_pd(d + i);
    const __m256d x1 = _mm256_loadu_pd(d + i + 4);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(x0, x0));
    acc1 = _mm256_add_pd(acc1, _mm256_mul_pd(x1, x1));
  }
  for (; i + 4 <= len; i += 4) {
    const __m256d x0 = _mm256_loadu_pd(d + i);
    acc0 = _mm256_add_pd(acc0, _mm256_mul_pd(x0, x0));
  }
  const __m256d acc = _mm256_add_pd(acc0, acc1);
  const __m128d folded = _mm_add_pd(_mm256_castpd256_pd128(acc), _mm256_extractf128_pd(acc, 1));
  double total = _mm_cvtsd_f64(_mm_add_sd(folded, _mm_unpackhi_pd(folded, folded)));
  for (; i < len; ++i) total += d[i] * d[i];
  return total;
}

void rotate_avx2(std::span<cplx> v, cplx phasor) {
  const __m256d p_re = _mm256_set1_pd(phasor.real());
  const __m256d p_im = _mm256_set1_pd(phasor.imag());
  double* d = as_doubles(v.data());
  const std::size_t count = v.size();
  std::size_t n = 0;
  for (; n + 2 <= count; n += 2) {
    const __m256d z = _mm256_loadu_pd(d + 2 * n);
    const __m256d z_swap = _mm256_permute_pd(z, 0x5);
    _mm256_storeu_pd(d + 2 * n, _mm256_addsub_pd(_mm256_mul_pd(z, p_re), _mm256_mul_pd(z_swap, p_im)));
  }
  for (; n < count; ++n) {
    const double zr = v[n].real();
    const double zi = v[n].imag();
    v[n] = {zr * phasor.real() - zi * phasor.imag(), zr * phasor.imag() + zi * phasor.real()};
  }
}

}  // namespace

const KernelTable& avx2_kernel_table() {
  static const KernelTable table{"avx2", distances_avx2, triple_product_sum_avx2, sum_norm_sq_avx2, rotate_avx2};
  return table;
}

}  // namespace irsim::kernels
