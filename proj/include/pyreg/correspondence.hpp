#pragma once

#include <cstdint>
#include <vector>

#include "pyreg/cloud.hpp"

namespace pyreg {

/// How the translation-and-rotation-invariant measurement compares the two
/// intra-cloud distances: |dsrc - dtgt| (Difference, metric threshold) or
/// |dsrc/dtgt - 1| (Ratio, relative threshold). Both compare to epsilon as
/// "smaller is more consistent".
enum class TrimMode { Difference, Ratio };

/// Putative match between a source and a target landmark of the same class.
struct Correspondence {
  int src_idx = 0;
  int tgt_idx = 0;
  std::uint32_t class_id = 0;
};

/// Every class-respecting (source, target) pair, ordered lexicographically by
/// (class id, source index, target index).
std::vector<Correspondence> all_to_all(const LandmarkSet& src,
                                       const LandmarkSet& tgt);

/// TRIM of two distinct correspondences. Throws Error(undefined_trim) in
/// Ratio mode when the target landmarks coincide.
double trim(const Correspondence& c1, const Correspondence& c2,
            const LandmarkSet& src, const LandmarkSet& tgt, TrimMode mode);

/// Binary consistency check: 1 iff trim < epsilon and the correspondences
/// share no landmark on either side.
int consistency(const Correspondence& c1, const Correspondence& c2,
                const LandmarkSet& src, const LandmarkSet& tgt, TrimMode mode,
                double epsilon);

}  // namespace pyreg
