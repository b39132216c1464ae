#pragma once

namespace pyreg::kernels {

/// CPU capabilities detected once at startup.
struct CpuFeatures {
  bool avx2 = false;
  bool fma = false;
};

/// Cached runtime detection result.
const CpuFeatures& cpu_features();

/// Human-readable name of the kernel set the dispatcher will pick.
const char* active_kernel_set(bool force_scalar = false);

}  // namespace pyreg::kernels
