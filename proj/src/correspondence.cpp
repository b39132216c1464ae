#include "pyreg/correspondence.hpp"

#include <algorithm>
#include <cmath>

#include "pyreg/error.hpp"

namespace pyreg {

std::vector<Correspondence> all_to_all(const LandmarkSet& src,
                                       const LandmarkSet& tgt) {
  std::vector<Correspondence> out;
  for (std::size_t i = 0; i < src.size(); ++i)
    for (std::size_t j = 0; j < tgt.size(); ++j)
      if (src.landmarks[i].class_id == tgt.landmarks[j].class_id)
        out.push_back({static_cast<int>(i), static_cast<int>(j),
                       src.landmarks[i].class_id});
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.class_id != b.class_id) return a.class_id < b.class_id;
    if (a.src_idx != b.src_idx) return a.src_idx < b.src_idx;
    return a.tgt_idx < b.tgt_idx;
  });
  return out;
}

double trim(const Correspondence& c1, const Correspondence& c2,
            const LandmarkSet& src, const LandmarkSet& tgt, TrimMode mode) {
  const double dsrc =
      (src.position(c1.src_idx) - src.position(c2.src_idx)).norm();
  const double dtgt =
      (tgt.position(c1.tgt_idx) - tgt.position(c2.tgt_idx)).norm();
  if (mode == TrimMode::Difference) return std::abs(dsrc - dtgt);
  if (dtgt <= 0.0)
    throw Error(Errc::undefined_trim,
                "ratio TRIM undefined: target landmarks coincide");
  return std::abs(dsrc / dtgt - 1.0);
}

int consistency(const Correspondence& c1, const Correspondence& c2,
                const LandmarkSet& src, const LandmarkSet& tgt, TrimMode mode,
                double epsilon) {
  // One-to-two matches are never consistent.
  if (c1.src_idx == c2.src_idx || c1.tgt_idx == c2.tgt_idx) return 0;
  return trim(c1, c2, src, tgt, mode) < epsilon ? 1 : 0;
}

}  // namespace pyreg
