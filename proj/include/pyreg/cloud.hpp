#pragma once

#include <cstdint>
#include <vector>

#include "pyreg/geometry.hpp"

namespace pyreg {

/// Dense metric point cloud, units meters.
struct DenseCloud {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
};

/// Dense cloud with one semantic class id per point.
struct LabeledCloud {
  std::vector<Point> points;
  std::vector<std::uint32_t> labels;

  std::size_t size() const { return points.size(); }
  DenseCloud dense() const { return DenseCloud{points}; }
};

/// Sparse semantic landmark: a cluster centroid tagged with its class.
struct Landmark {
  Point position;
  std::uint32_t class_id = 0;
};

struct LandmarkSet {
  std::vector<Landmark> landmarks;

  std::size_t size() const { return landmarks.size(); }
  bool empty() const { return landmarks.empty(); }
  const Point& position(std::size_t i) const { return landmarks[i].position; }
};

DenseCloud transformed(const RigidMotion& motion, const DenseCloud& cloud);
LandmarkSet transformed(const RigidMotion& motion, const LandmarkSet& set);

}  // namespace pyreg
