#include "pyreg/kernels/kernels.hpp"

namespace pyreg::kernels {

namespace {

bool use_avx2(bool force_scalar) {
#if defined(PYREG_HAVE_AVX2_TU)
  if (force_scalar) return false;
  const auto& f = cpu_features();
  return f.avx2 && f.fma;
#else
  (void)force_scalar;
  return false;
#endif
}

}  // namespace

PenalizedMatvecFn get_penalized_matvec(bool force_scalar) {
#if defined(PYREG_HAVE_AVX2_TU)
  if (use_avx2(force_scalar)) return detail::penalized_matvec_avx2;
#endif
  (void)force_scalar;
  return detail::penalized_matvec_scalar;
}

PairwiseDistFn get_pairwise_distances(bool force_scalar) {
#if defined(PYREG_HAVE_AVX2_TU)
  if (use_avx2(force_scalar)) return detail::pairwise_distances_avx2;
#endif
  (void)force_scalar;
  return detail::pairwise_distances_scalar;
}

TransformPointsFn get_transform_points(bool force_scalar) {
#if defined(PYREG_HAVE_AVX2_TU)
  if (use_avx2(force_scalar)) return detail::transform_points_avx2;
#endif
  (void)force_scalar;
  return detail::transform_points_scalar;
}

RobustSumFn get_robust_sum(bool force_scalar) {
#if defined(PYREG_HAVE_AVX2_TU)
  if (use_avx2(force_scalar)) return detail::robust_sum_avx2;
#endif
  (void)force_scalar;
  return detail::robust_sum_scalar;
}

}  // namespace pyreg::kernels
