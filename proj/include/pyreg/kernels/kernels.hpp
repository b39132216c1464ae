#pragma once

#include <cstddef>

#include "pyreg/kernels/cpu_features.hpp"

// Data-parallel inner loops of the library. Every kernel has a scalar
// reference implementation and (on x86-64) an AVX2 variant; the getters pick
// one at runtime. Call sites that need bit-stable behavior across ISAs can
// force the scalar path.
namespace pyreg::kernels {

/// Per-point robust distance functions used by geometric verification.
enum class RobustKind { Truncated, Trimmed, Euclidean };

/// y = W_d * x for the penalized affinity matrix W_d, where
/// W_d(i,j) = w(i,j) if w(i,j) != 0, and -d otherwise.
/// w is row-major n-by-n, symmetric with unit diagonal.
using PenalizedMatvecFn = void (*)(const double* w, int n, double d,
                                   const double* x, double* y);

/// out(i,j) = Euclidean distance between points i and j (full n-by-n,
/// row-major, zero diagonal). Points given as separate coordinate arrays.
using PairwiseDistFn = void (*)(const double* xs, const double* ys,
                                const double* zs, int n, double* out);

/// Apply p' = R*p + t to n points. rot is row-major 3x3, trans is length 3.
/// Output arrays may not alias the inputs.
using TransformPointsFn = void (*)(const double* rot, const double* trans,
                                   const double* xs, const double* ys,
                                   const double* zs, int n, double* ox,
                                   double* oy, double* oz);

/// Sum of rho(dist[i]) with rho per RobustKind:
///   Truncated: min(d, mu); Trimmed: d if d < mu else 0; Euclidean: d.
using RobustSumFn = double (*)(const double* dist, int n, double mu,
                               RobustKind kind);

PenalizedMatvecFn get_penalized_matvec(bool force_scalar = false);
PairwiseDistFn get_pairwise_distances(bool force_scalar = false);
TransformPointsFn get_transform_points(bool force_scalar = false);
RobustSumFn get_robust_sum(bool force_scalar = false);

// Auto-dispatched wrappers; the function pointer is resolved once.
inline void penalized_matvec(const double* w, int n, double d, const double* x,
                             double* y) {
  static const PenalizedMatvecFn fn = get_penalized_matvec();
  fn(w, n, d, x, y);
}

inline void pairwise_distances(const double* xs, const double* ys,
                               const double* zs, int n, double* out) {
  static const PairwiseDistFn fn = get_pairwise_distances();
  fn(xs, ys, zs, n, out);
}

inline void transform_points(const double* rot, const double* trans,
                             const double* xs, const double* ys,
                             const double* zs, int n, double* ox, double* oy,
                             double* oz) {
  static const TransformPointsFn fn = get_transform_points();
  fn(rot, trans, xs, ys, zs, n, ox, oy, oz);
}

inline double robust_sum(const double* dist, int n, double mu,
                         RobustKind kind) {
  static const RobustSumFn fn = get_robust_sum();
  return fn(dist, n, mu, kind);
}

namespace detail {
// Scalar reference kernels (always available; oracle for the SIMD variants).
void penalized_matvec_scalar(const double* w, int n, double d, const double* x,
                             double* y);
void pairwise_distances_scalar(const double* xs, const double* ys,
                               const double* zs, int n, double* out);
void transform_points_scalar(const double* rot, const double* trans,
                             const double* xs, const double* ys,
                             const double* zs, int n, double* ox, double* oy,
                             double* oz);
double robust_sum_scalar(const double* dist, int n, double mu, RobustKind kind);

#if defined(PYREG_HAVE_AVX2_TU)
void penalized_matvec_avx2(const double* w, int n, double d, const double* x,
                           double* y);
void pairwise_distances_avx2(const double* xs, const double* ys,
                             const double* zs, int n, double* out);
void transform_points_avx2(const double* rot, const double* trans,
                           const double* xs, const double* ys, const double* zs,
                           int n, double* ox, double* oy, double* oz);
double robust_sum_avx2(const double* dist, int n, double mu, RobustKind kind);
#endif
}  // namespace detail

}  // namespace pyreg::kernels
