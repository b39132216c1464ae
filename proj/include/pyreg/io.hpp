#pragma once

#include <optional>
#include <string>
#include <variant>

#include "pyreg/cloud.hpp"

namespace pyreg {

using CloudOrLabeled = std::variant<DenseCloud, LabeledCloud>;

/// Read whitespace-separated ASCII with one point per line, either "x y z"
/// or "x y z label". The column count of the first data line is binding for
/// the rest of the file. Throws Error(parse) with the offending line number,
/// Error(io) if the file is missing or empty.
CloudOrLabeled read_xyz(const std::string& path);

/// Read a KITTI velodyne scan (little-endian float32 x,y,z,intensity per
/// point; intensity dropped) and optionally its label file (one little-endian
/// uint32 per point, lower 16 bits = semantic class). Throws Error(io) on
/// truncated files or a point-count mismatch between scan and labels.
CloudOrLabeled read_kitti_bin(const std::string& bin_path,
                              const std::optional<std::string>& label_path = {});

void write_xyz(const std::string& path, const DenseCloud& cloud);
void write_xyz(const std::string& path, const LabeledCloud& cloud);

}  // namespace pyreg
