#include "pyreg/clustering.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "pyreg/error.hpp"

namespace pyreg {

namespace {

struct VoxelKey {
  std::int64_t x, y, z;
  bool operator==(const VoxelKey&) const = default;
};

struct VoxelKeyHash {
  std::size_t operator()(const VoxelKey& k) const {
    std::size_t h = static_cast<std::size_t>(k.x) * 0x9E3779B97F4A7C15ull;
    h ^= static_cast<std::size_t>(k.y) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(k.z) + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    return h;
  }
};

struct DisjointSet {
  std::vector<int> parent;

  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

LandmarkSet extract_landmarks(const LabeledCloud& cloud,
                              const std::vector<std::uint32_t>& classes,
                              double voxel, int min_points) {
  if (voxel <= 0.0) throw Error(Errc::bad_config, "voxel size must be > 0");
  if (min_points < 1) throw Error(Errc::bad_config, "min_points must be >= 1");
  if (cloud.points.size() != cloud.labels.size())
    throw Error(Errc::bad_config, "label count does not match point count");

  std::vector<std::uint32_t> wanted = classes;
  std::sort(wanted.begin(), wanted.end());
  wanted.erase(std::unique(wanted.begin(), wanted.end()), wanted.end());

  LandmarkSet out;
  for (std::uint32_t cls : wanted) {
    // Occupied voxels of this class, in first-seen order.
    std::unordered_map<VoxelKey, int, VoxelKeyHash> voxel_index;
    std::vector<VoxelKey> keys;
    std::vector<int> point_voxel;  // per selected point
    std::vector<std::size_t> point_ids;
    for (std::size_t i = 0; i < cloud.points.size(); ++i) {
      if (cloud.labels[i] != cls) continue;
      const Point& p = cloud.points[i];
      const VoxelKey key{static_cast<std::int64_t>(std::floor(p.x() / voxel)),
                         static_cast<std::int64_t>(std::floor(p.y() / voxel)),
                         static_cast<std::int64_t>(std::floor(p.z() / voxel))};
      auto [it, inserted] = voxel_index.emplace(key, static_cast<int>(keys.size()));
      if (inserted) keys.push_back(key);
      point_voxel.push_back(it->second);
      point_ids.push_back(i);
    }
    if (keys.empty()) continue;

    DisjointSet components(static_cast<int>(keys.size()));
    for (int v = 0; v < static_cast<int>(keys.size()); ++v) {
      const VoxelKey& k = keys[v];
      for (int dx = -1; dx <= 1; ++dx)
        for (int dy = -1; dy <= 1; ++dy)
          for (int dz = -1; dz <= 1; ++dz) {
            if (dx == 0 && dy == 0 && dz == 0) continue;
            const auto it = voxel_index.find({k.x + dx, k.y + dy, k.z + dz});
            if (it != voxel_index.end()) components.unite(v, it->second);
          }
    }

    struct Accum {
      Eigen::Vector3d sum = Eigen::Vector3d::Zero();
      int count = 0;
      std::size_t first_point = 0;
    };
    std::unordered_map<int, Accum> accum;
    for (std::size_t k = 0; k < point_voxel.size(); ++k) {
      const int root = components.find(point_voxel[k]);
      auto [it, inserted] = accum.emplace(root, Accum{});
      if (inserted) it->second.first_point = point_ids[k];
      it->second.sum += cloud.points[point_ids[k]];
      it->second.count += 1;
      it->second.first_point = std::min(it->second.first_point, point_ids[k]);
    }

    std::vector<std::pair<std::size_t, Landmark>> found;
    for (const auto& [root, acc] : accum) {
      if (acc.count < min_points) continue;
      found.push_back({acc.first_point, Landmark{acc.sum / acc.count, cls}});
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [first, lm] : found) out.landmarks.push_back(lm);
  }
  return out;
}

LandmarkSet landmarks_from_points(const LabeledCloud& cloud,
                                  const std::vector<std::uint32_t>& classes) {
  if (cloud.points.size() != cloud.labels.size())
    throw Error(Errc::bad_config, "label count does not match point count");
  LandmarkSet out;
  for (std::size_t i = 0; i < cloud.points.size(); ++i) {
    if (std::find(classes.begin(), classes.end(), cloud.labels[i]) ==
        classes.end())
      continue;
    out.landmarks.push_back({cloud.points[i], cloud.labels[i]});
  }
  return out;
}

}  // namespace pyreg
