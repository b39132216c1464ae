#include <cmath>

#include "pyreg/kernels/kernels.hpp"

namespace pyreg::kernels::detail {

void penalized_matvec_scalar(const double* w, int n, double d, const double* x,
                             double* y) {
  for (int i = 0; i < n; ++i) {
    const double* row = w + static_cast<std::size_t>(i) * n;
    double acc = 0.0;
    for (int j = 0; j < n; ++j) {
      const double wij = row[j];
      acc += (wij != 0.0 ? wij : -d) * x[j];
    }
    y[i] = acc;
  }
}

void pairwise_distances_scalar(const double* xs, const double* ys,
                               const double* zs, int n, double* out) {
  for (int i = 0; i < n; ++i) {
    const double xi = xs[i], yi = ys[i], zi = zs[i];
    double* row = out + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) {
      const double dx = xs[j] - xi;
      const double dy = ys[j] - yi;
      const double dz = zs[j] - zi;
      row[j] = std::sqrt(dx * dx + dy * dy + dz * dz);
    }
  }
}

void transform_points_scalar(const double* rot, const double* trans,
                             const double* xs, const double* ys,
                             const double* zs, int n, double* ox, double* oy,
                             double* oz) {
  for (int i = 0; i < n; ++i) {
    const double x = xs[i], y = ys[i], z = zs[i];
    ox[i] = rot[0] * x + rot[1] * y + rot[2] * z + trans[0];
    oy[i] = rot[3] * x + rot[4] * y + rot[5] * z + trans[1];
    oz[i] = rot[6] * x + rot[7] * y + rot[8] * z + trans[2];
  }
}

double robust_sum_scalar(const double* dist, int n, double mu,
                         RobustKind kind) {
  double acc = 0.0;
  switch (kind) {
    case RobustKind::Truncated:
      for (int i = 0; i < n; ++i) acc += dist[i] < mu ? dist[i] : mu;
      break;
    case RobustKind::Trimmed:
      for (int i = 0; i < n; ++i) acc += dist[i] < mu ? dist[i] : 0.0;
      break;
    case RobustKind::Euclidean:
      for (int i = 0; i < n; ++i) acc += dist[i];
      break;
  }
  return acc;
}

}  // namespace pyreg::kernels::detail
