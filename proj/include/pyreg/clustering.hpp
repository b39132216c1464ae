#pragma once

#include <cstdint>
#include <vector>

#include "pyreg/cloud.hpp"

namespace pyreg {

/// Extract one landmark per voxel-connected component of each registration
/// class: points of a class are binned into cubic voxels of edge `voxel`,
/// occupied voxels are joined under 26-connectivity, and every component with
/// at least `min_points` points yields its point centroid.
///
/// Landmarks are ordered by (class id, first point index in the component),
/// so the result is deterministic in the input point order. An empty result
/// is valid.
LandmarkSet extract_landmarks(const LabeledCloud& cloud,
                              const std::vector<std::uint32_t>& classes,
                              double voxel, int min_points);

/// Treat every point of a registration class as one landmark (clustering
/// bypass, used when landmark files are authored directly).
LandmarkSet landmarks_from_points(const LabeledCloud& cloud,
                                  const std::vector<std::uint32_t>& classes);

}  // namespace pyreg
