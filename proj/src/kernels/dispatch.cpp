#include <cstdlib>
#include <stdexcept>
#include <string>

#include "irsim/kernels/kernels.hpp"

namespace irsim::kernels {

#if defined(IRSIM_HAVE_AVX2_KERNELS)
const KernelTable& avx2_kernel_table();
#endif

const KernelTable* avx2_kernels() {
#if defined(IRSIM_HAVE_AVX2_KERNELS)
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &avx2_kernel_table();
#endif
  return nullptr;
}

namespace {

const KernelTable& resolve() {
  const char* env = std::getenv("IRSIM_KERNELS");
  const std::string choice = env ? env : "auto";
  if (choice == "scalar") return scalar_kernels();
  if (choice == "avx2") {
    if (const KernelTable* t = avx2_kernels()) return *t;
    throw std::runtime_error("IRSIM_KERNELS=avx2 requested but AVX2 kernels are unavailable");
  }
  if (choice != "auto") throw std::runtime_error("IRSIM_KERNELS must be scalar, avx2 or auto, got '" + choice + "'");
  if (const KernelTable* t = avx2_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = resolve();
  return table;
}

}  // namespace irsim::kernels
