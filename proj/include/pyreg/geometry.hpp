#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <utility>

namespace pyreg {

using Point = Eigen::Vector3d;

/// Degrees of freedom of the estimated motion. SE2 is carried in the same
/// 3D container with a pure z-axis rotation and zero z translation, so all
/// solvers share one code path.
enum class Dof { SE2, SE3 };

/// Rigid motion T = [R, t] with R in SO(3).
///
/// The checked factory `make` enforces orthonormality, det +1 and (for SE2)
/// the planar structure; the raw aggregate is kept public so internal code
/// that constructs motions from known-good algebra can skip the checks.
struct RigidMotion {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();
  Dof dof = Dof::SE3;

  /// Validated construction; throws Error(bad_config) on violation.
  static RigidMotion make(const Eigen::Matrix3d& rotation,
                          const Eigen::Vector3d& translation, Dof dof);

  static RigidMotion identity(Dof dof = Dof::SE3);

  /// Pure rotation about z by `radians` (valid under both dof tags).
  static RigidMotion rotation_z(double radians, Dof dof = Dof::SE3);

  /// 4x4 homogeneous form.
  Eigen::Matrix4d matrix() const;
};

Point apply(const RigidMotion& motion, const Point& p);
RigidMotion compose(const RigidMotion& a, const RigidMotion& b);
RigidMotion inverse(const RigidMotion& motion);

/// (translation error in meters, rotation error in degrees). The rotational
/// part is the geodesic angle of R_est * R_gt^T.
std::pair<double, double> pose_error(const RigidMotion& est,
                                     const RigidMotion& gt);

/// Geodesic angle of a rotation matrix in radians, from the trace formula
/// with the argument clamped to [-1, 1].
double rotation_angle(const Eigen::Matrix3d& rotation);

// ASCII transform serialization: row-major 4x4 homogeneous matrix,
// 12 significant digits, one row per line.
void write_transform(std::ostream& os, const RigidMotion& motion);
RigidMotion read_transform(std::istream& is, Dof dof = Dof::SE3);

constexpr double kDegPerRad = 57.29577951308232;

}  // namespace pyreg
