#include "pyreg/io.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>

#include "pyreg/error.hpp"

namespace pyreg {

namespace {

std::string line_err(const std::string& path, std::size_t line,
                     const std::string& what) {
  std::ostringstream os;
  os << path << ":" << line << ": " << what;
  return os.str();
}

}  // namespace

DenseCloud transformed(const RigidMotion& motion, const DenseCloud& cloud) {
  DenseCloud out;
  out.points.reserve(cloud.points.size());
  for (const Point& p : cloud.points) out.points.push_back(apply(motion, p));
  return out;
}

LandmarkSet transformed(const RigidMotion& motion, const LandmarkSet& set) {
  LandmarkSet out;
  out.landmarks.reserve(set.landmarks.size());
  for (const Landmark& lm : set.landmarks)
    out.landmarks.push_back({apply(motion, lm.position), lm.class_id});
  return out;
}

CloudOrLabeled read_xyz(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io, "cannot open " + path);

  std::vector<Point> points;
  std::vector<std::uint32_t> labels;
  int columns = 0;  // 3 or 4, fixed by the first data line
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream ls(line);
    std::string first;
    if (!(ls >> first)) continue;  // blank line
    ls.clear();
    ls.seekg(0);
    double x, y, z;
    if (!(ls >> x >> y >> z))
      throw Error(Errc::parse, line_err(path, lineno, "expected x y z"));
    if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(z))
      throw Error(Errc::parse, line_err(path, lineno, "non-finite coordinate"));
    bool has_label = false;
    std::uint32_t label = 0;
    std::string tok;
    if (ls >> tok) {
      unsigned long value = 0;
      const char* end = tok.data() + tok.size();
      const auto res = std::from_chars(tok.data(), end, value);
      if (res.ec != std::errc() || res.ptr != end || value > 0xFFFFFFFFul)
        throw Error(Errc::parse, line_err(path, lineno, "bad label '" + tok + "'"));
      label = static_cast<std::uint32_t>(value);
      has_label = true;
      std::string rest;
      if (ls >> rest)
        throw Error(Errc::parse, line_err(path, lineno, "trailing tokens"));
    }

    const int cols = has_label ? 4 : 3;
    if (columns == 0)
      columns = cols;
    else if (columns != cols)
      throw Error(Errc::parse,
                  line_err(path, lineno, "inconsistent column count"));
    points.emplace_back(x, y, z);
    if (has_label) labels.push_back(static_cast<std::uint32_t>(label));
  }
  if (points.empty()) throw Error(Errc::io, path + ": empty point file");
  if (columns == 4) return LabeledCloud{std::move(points), std::move(labels)};
  return DenseCloud{std::move(points)};
}

CloudOrLabeled read_kitti_bin(const std::string& bin_path,
                              const std::optional<std::string>& label_path) {
  std::ifstream in(bin_path, std::ios::binary | std::ios::ate);
  if (!in) throw Error(Errc::io, "cannot open " + bin_path);
  const std::streamoff size = in.tellg();
  if (size == 0) throw Error(Errc::io, bin_path + ": empty scan");
  if (size % 16 != 0)
    throw Error(Errc::io, bin_path + ": truncated scan (size not a multiple of 16)");
  const std::size_t n = static_cast<std::size_t>(size) / 16;

  in.seekg(0);
  std::vector<float> raw(n * 4);
  in.read(reinterpret_cast<char*>(raw.data()), size);
  if (!in) throw Error(Errc::io, bin_path + ": short read");

  std::vector<Point> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    points.emplace_back(raw[4 * i], raw[4 * i + 1], raw[4 * i + 2]);

  if (!label_path) return DenseCloud{std::move(points)};

  std::ifstream lin(*label_path, std::ios::binary | std::ios::ate);
  if (!lin) throw Error(Errc::io, "cannot open " + *label_path);
  const std::streamoff lsize = lin.tellg();
  if (lsize % 4 != 0 || static_cast<std::size_t>(lsize) / 4 != n)
    throw Error(Errc::io, *label_path + ": label count does not match " +
                              std::to_string(n) + " scan points");
  lin.seekg(0);
  std::vector<std::uint32_t> raw_labels(n);
  lin.read(reinterpret_cast<char*>(raw_labels.data()), lsize);
  if (!lin) throw Error(Errc::io, *label_path + ": short read");

  std::vector<std::uint32_t> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = raw_labels[i] & 0xFFFFu;
  return LabeledCloud{std::move(points), std::move(labels)};
}

namespace {

void write_lines(const std::string& path, const std::vector<Point>& points,
                 const std::vector<std::uint32_t>* labels) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io, "cannot write " + path);
  out.precision(12);
  for (std::size_t i = 0; i < points.size(); ++i) {
    out << points[i].x() << " " << points[i].y() << " " << points[i].z();
    if (labels) out << " " << (*labels)[i];
    out << "\n";
  }
}

}  // namespace

void write_xyz(const std::string& path, const DenseCloud& cloud) {
  write_lines(path, cloud.points, nullptr);
}

void write_xyz(const std::string& path, const LabeledCloud& cloud) {
  write_lines(path, cloud.points, &cloud.labels);
}

}  // namespace pyreg
