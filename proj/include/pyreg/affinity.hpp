#pragma once

#include <iosfwd>
#include <vector>

#include "pyreg/correspondence.hpp"

namespace pyreg {

/// Edge weighting of the consistency graph. Binary matches the plain
/// consistency check; Gaussian keeps the same edge set but weights each edge
/// by exp(-trim^2 / (2 sigma^2)). sigma = 0 selects epsilon/3 per layer.
struct Weighting {
  enum class Kind { Binary, Gaussian };
  Kind kind = Kind::Binary;
  double sigma = 0.0;

  static Weighting binary() { return {Kind::Binary, 0.0}; }
  static Weighting gaussian(double sigma = 0.0) {
    return {Kind::Gaussian, sigma};
  }
};

/// Dense symmetric pairwise-consistency matrix for one threshold. Entries are
/// in [0, 1] with unit diagonal; pairs sharing a source or target landmark
/// are pinned to zero. Row-major storage, materialized on both triangles.
/// Problem sizes stay small after semantic sparsification; sizes beyond a few
/// thousand correspondences are outside the design envelope (n <= 5000).
struct AffinityMatrix {
  int n = 0;
  double epsilon = 0.0;
  std::vector<double> values;

  double operator()(int i, int j) const {
    return values[static_cast<std::size_t>(i) * n + j];
  }
  const double* data() const { return values.data(); }

  /// Count of nonzero off-diagonal entries (twice the edge count).
  std::size_t nnz_off_diagonal() const;
};

/// k affinity matrices over strictly increasing thresholds, sparse to dense,
/// sharing one correspondence list.
struct PyramidGraph {
  std::vector<AffinityMatrix> layers;
  std::vector<Correspondence> correspondences;

  std::size_t depth() const { return layers.size(); }
};

AffinityMatrix build_affinity(const std::vector<Correspondence>& corrs,
                              const LandmarkSet& src, const LandmarkSet& tgt,
                              TrimMode mode, double epsilon,
                              const Weighting& weighting = Weighting::binary());

PyramidGraph build_pyramid(const std::vector<Correspondence>& corrs,
                           const LandmarkSet& src, const LandmarkSet& tgt,
                           TrimMode mode, const std::vector<double>& thresholds,
                           const Weighting& weighting = Weighting::binary());

/// Upper-triangle nonzeros as "i j w" lines, for solver cross-checks.
void dump_affinity(std::ostream& os, const AffinityMatrix& matrix);

}  // namespace pyreg
