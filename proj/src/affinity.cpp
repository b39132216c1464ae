#include "pyreg/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "pyreg/error.hpp"
#include "pyreg/kernels/kernels.hpp"

namespace pyreg {

namespace {

// Full pairwise distance matrix over landmark positions.
std::vector<double> landmark_distances(const LandmarkSet& set) {
  const int n = static_cast<int>(set.size());
  std::vector<double> xs(n), ys(n), zs(n);
  for (int i = 0; i < n; ++i) {
    xs[i] = set.position(i).x();
    ys[i] = set.position(i).y();
    zs[i] = set.position(i).z();
  }
  std::vector<double> out(static_cast<std::size_t>(n) * n);
  kernels::pairwise_distances(xs.data(), ys.data(), zs.data(), n, out.data());
  return out;
}

}  // namespace

std::size_t AffinityMatrix::nnz_off_diagonal() const {
  std::size_t count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && (*this)(i, j) != 0.0) ++count;
  return count;
}

AffinityMatrix build_affinity(const std::vector<Correspondence>& corrs,
                              const LandmarkSet& src, const LandmarkSet& tgt,
                              TrimMode mode, double epsilon,
                              const Weighting& weighting) {
  if (corrs.empty())
    throw Error(Errc::bad_config, "affinity matrix needs at least one correspondence");
  if (epsilon <= 0.0)
    throw Error(Errc::bad_config, "consistency threshold must be > 0");

  const int n = static_cast<int>(corrs.size());
  const std::vector<double> dsrc = landmark_distances(src);
  const std::vector<double> dtgt = landmark_distances(tgt);
  const std::size_t src_n = src.size();
  const std::size_t tgt_n = tgt.size();

  const double sigma =
      weighting.sigma > 0.0 ? weighting.sigma : epsilon / 3.0;
  const double inv_two_sigma_sq = 1.0 / (2.0 * sigma * sigma);

  AffinityMatrix m;
  m.n = n;
  m.epsilon = epsilon;
  m.values.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i)
    m.values[static_cast<std::size_t>(i) * n + i] = 1.0;

  for (int i = 0; i < n; ++i) {
    const Correspondence& a = corrs[i];
    for (int j = i + 1; j < n; ++j) {
      const Correspondence& b = corrs[j];
      if (a.src_idx == b.src_idx || a.tgt_idx == b.tgt_idx) continue;
      const double ds = dsrc[a.src_idx * src_n + b.src_idx];
      const double dt = dtgt[a.tgt_idx * tgt_n + b.tgt_idx];
      double value;
      if (mode == TrimMode::Difference) {
        value = std::abs(ds - dt);
      } else {
        if (dt <= 0.0)
          throw Error(Errc::undefined_trim,
                      "ratio TRIM undefined: target landmarks coincide");
        value = std::abs(ds / dt - 1.0);
      }
      if (value >= epsilon) continue;
      const double w = weighting.kind == Weighting::Kind::Binary
                           ? 1.0
                           : std::exp(-value * value * inv_two_sigma_sq);
      m.values[static_cast<std::size_t>(i) * n + j] = w;
      m.values[static_cast<std::size_t>(j) * n + i] = w;
    }
  }
  return m;
}

PyramidGraph build_pyramid(const std::vector<Correspondence>& corrs,
                           const LandmarkSet& src, const LandmarkSet& tgt,
                           TrimMode mode, const std::vector<double>& thresholds,
                           const Weighting& weighting) {
  if (thresholds.empty())
    throw Error(Errc::bad_config, "threshold list is empty");
  for (std::size_t i = 0; i < thresholds.size(); ++i) {
    if (thresholds[i] <= 0.0)
      throw Error(Errc::bad_config, "thresholds must be > 0");
    if (i > 0 && thresholds[i] <= thresholds[i - 1])
      throw Error(Errc::bad_config, "thresholds must be strictly increasing");
  }
  PyramidGraph pyramid;
  pyramid.correspondences = corrs;
  pyramid.layers.reserve(thresholds.size());
  for (double eps : thresholds)
    pyramid.layers.push_back(
        build_affinity(corrs, src, tgt, mode, eps, weighting));
  return pyramid;
}

void dump_affinity(std::ostream& os, const AffinityMatrix& matrix) {
  os.precision(12);
  for (int i = 0; i < matrix.n; ++i)
    for (int j = i; j < matrix.n; ++j)
      if (matrix(i, j) != 0.0)
        os << i << " " << j << " " << matrix(i, j) << "\n";
}

}  // namespace pyreg
