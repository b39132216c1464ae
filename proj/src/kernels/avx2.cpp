// AVX2 kernel variants. This TU is compiled with -mavx2 -mfma and must only
// be entered after cpu_features() confirms support.
#if defined(PYREG_HAVE_AVX2_TU)

#include <immintrin.h>

#include <cmath>

#include "pyreg/kernels/kernels.hpp"

namespace pyreg::kernels::detail {

namespace {

inline double hsum(__m256d v) {
  __m128d lo = _mm256_castpd256_pd128(v);
  __m128d hi = _mm256_extractf128_pd(v, 1);
  lo = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(lo, _mm_unpackhi_pd(lo, lo)));
}

}  // namespace

void penalized_matvec_avx2(const double* w, int n, double d, const double* x,
                           double* y) {
  const __m256d zero = _mm256_setzero_pd();
  const __m256d neg_d = _mm256_set1_pd(-d);
  for (int i = 0; i < n; ++i) {
    const double* row = w + static_cast<std::size_t>(i) * n;
    __m256d acc = _mm256_setzero_pd();
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d wv = _mm256_loadu_pd(row + j);
      const __m256d xv = _mm256_loadu_pd(x + j);
      const __m256d nz = _mm256_cmp_pd(wv, zero, _CMP_NEQ_OQ);
      const __m256d term = _mm256_blendv_pd(neg_d, wv, nz);
      acc = _mm256_fmadd_pd(term, xv, acc);
    }
    double tail = 0.0;
    for (; j < n; ++j) {
      const double wij = row[j];
      tail += (wij != 0.0 ? wij : -d) * x[j];
    }
    y[i] = hsum(acc) + tail;
  }
}

void pairwise_distances_avx2(const double* xs, const double* ys,
                             const double* zs, int n, double* out) {
  for (int i = 0; i < n; ++i) {
    const __m256d xi = _mm256_set1_pd(xs[i]);
    const __m256d yi = _mm256_set1_pd(ys[i]);
    const __m256d zi = _mm256_set1_pd(zs[i]);
    double* row = out + static_cast<std::size_t>(i) * n;
    int j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d dx = _mm256_sub_pd(_mm256_loadu_pd(xs + j), xi);
      const __m256d dy = _mm256_sub_pd(_mm256_loadu_pd(ys + j), yi);
      const __m256d dz = _mm256_sub_pd(_mm256_loadu_pd(zs + j), zi);
      __m256d sq = _mm256_mul_pd(dx, dx);
      sq = _mm256_fmadd_pd(dy, dy, sq);
      sq = _mm256_fmadd_pd(dz, dz, sq);
      _mm256_storeu_pd(row + j, _mm256_sqrt_pd(sq));
    }
    for (; j < n; ++j) {
      const double dx = xs[j] - xs[i];
      const double dy = ys[j] - ys[i];
      const double dz = zs[j] - zs[i];
      row[j] = std::sqrt(dx * dx + dy * dy + dz * dz);
    }
  }
}

void transform_points_avx2(const double* rot, const double* trans,
                           const double* xs, const double* ys, const double* zs,
                           int n, double* ox, double* oy, double* oz) {
  const __m256d r00 = _mm256_set1_pd(rot[0]), r01 = _mm256_set1_pd(rot[1]),
                r02 = _mm256_set1_pd(rot[2]);
  const __m256d r10 = _mm256_set1_pd(rot[3]), r11 = _mm256_set1_pd(rot[4]),
                r12 = _mm256_set1_pd(rot[5]);
  const __m256d r20 = _mm256_set1_pd(rot[6]), r21 = _mm256_set1_pd(rot[7]),
                r22 = _mm256_set1_pd(rot[8]);
  const __m256d tx = _mm256_set1_pd(trans[0]), ty = _mm256_set1_pd(trans[1]),
                tz = _mm256_set1_pd(trans[2]);
  int i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d x = _mm256_loadu_pd(xs + i);
    const __m256d y = _mm256_loadu_pd(ys + i);
    const __m256d z = _mm256_loadu_pd(zs + i);
    __m256d vx = _mm256_fmadd_pd(r00, x, tx);
    vx = _mm256_fmadd_pd(r01, y, vx);
    vx = _mm256_fmadd_pd(r02, z, vx);
    __m256d vy = _mm256_fmadd_pd(r10, x, ty);
    vy = _mm256_fmadd_pd(r11, y, vy);
    vy = _mm256_fmadd_pd(r12, z, vy);
    __m256d vz = _mm256_fmadd_pd(r20, x, tz);
    vz = _mm256_fmadd_pd(r21, y, vz);
    vz = _mm256_fmadd_pd(r22, z, vz);
    _mm256_storeu_pd(ox + i, vx);
    _mm256_storeu_pd(oy + i, vy);
    _mm256_storeu_pd(oz + i, vz);
  }
  for (; i < n; ++i) {
    const double x = xs[i], y = ys[i], z = zs[i];
    ox[i] = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
    oy[i] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
    oz[i] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
  }
}

double robust_sum_avx2(const double* dist, int n, double mu, RobustKind kind) {
  const __m256d mu_v = _mm256_set1_pd(mu);
  __m256d acc = _mm256_setzero_pd();
  int i = 0;
  double tail = 0.0;
  switch (kind) {
    case RobustKind::Truncated:
      for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_min_pd(_mm256_loadu_pd(dist + i), mu_v));
      for (; i < n; ++i) tail += dist[i] < mu ? dist[i] : mu;
      break;
    case RobustKind::Trimmed:
      for (; i + 4 <= n; i += 4) {
        const __m256d dv = _mm256_loadu_pd(dist + i);
        const __m256d keep = _mm256_cmp_pd(dv, mu_v, _CMP_LT_OQ);
        acc = _mm256_add_pd(acc, _mm256_and_pd(dv, keep));
      }
      for (; i < n; ++i) tail += dist[i] < mu ? dist[i] : 0.0;
      break;
    case RobustKind::Euclidean:
      for (; i + 4 <= n; i += 4)
        acc = _mm256_add_pd(acc, _mm256_loadu_pd(dist + i));
      for (; i < n; ++i) tail += dist[i];
      break;
  }
  return hsum(acc) + tail;
}

}  // namespace pyreg::kernels::detail

#endif  // PYREG_HAVE_AVX2_TU
