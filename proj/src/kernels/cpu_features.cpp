#include "pyreg/kernels/cpu_features.hpp"

namespace pyreg::kernels {

namespace {

CpuFeatures detect() {
  CpuFeatures f;
#if defined(__x86_64__) || defined(_M_X64)
#if defined(__GNUC__) || defined(__clang__)
  f.avx2 = __builtin_cpu_supports("avx2");
  f.fma = __builtin_cpu_supports("fma");
#endif
#endif
  return f;
}

}  // namespace

const CpuFeatures& cpu_features() {
  static const CpuFeatures f = detect();
  return f;
}

const char* active_kernel_set(bool force_scalar) {
  if (force_scalar) return "scalar";
#if defined(PYREG_HAVE_AVX2_TU)
  const auto& f = cpu_features();
  if (f.avx2 && f.fma) return "avx2";
#endif
  return "scalar";
}

}  // namespace pyreg::kernels
