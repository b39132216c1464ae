#include "pyreg/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>

#include "pyreg/error.hpp"

namespace pyreg {

namespace {

constexpr double kOrthoTol = 1e-9;

void check_rotation(const Eigen::Matrix3d& rotation, Dof dof) {
  const Eigen::Matrix3d gram = rotation.transpose() * rotation;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > kOrthoTol)
    throw Error(Errc::bad_config, "rotation is not orthonormal");
  if (std::abs(rotation.determinant() - 1.0) > kOrthoTol)
    throw Error(Errc::bad_config, "rotation determinant is not +1");
  if (dof == Dof::SE2) {
    // Pure z rotation: last row/column must be (0, 0, 1).
    if (std::abs(rotation(2, 2) - 1.0) > kOrthoTol ||
        std::abs(rotation(0, 2)) > kOrthoTol ||
        std::abs(rotation(1, 2)) > kOrthoTol ||
        std::abs(rotation(2, 0)) > kOrthoTol ||
        std::abs(rotation(2, 1)) > kOrthoTol)
      throw Error(Errc::bad_config, "SE2 rotation is not about the z axis");
  }
}

}  // namespace

RigidMotion RigidMotion::make(const Eigen::Matrix3d& rotation,
                              const Eigen::Vector3d& translation, Dof dof) {
  check_rotation(rotation, dof);
  if (!translation.allFinite())
    throw Error(Errc::bad_config, "translation has non-finite entries");
  if (dof == Dof::SE2 && std::abs(translation.z()) > kOrthoTol)
    throw Error(Errc::bad_config, "SE2 translation has a z component");
  return RigidMotion{rotation, translation, dof};
}

RigidMotion RigidMotion::identity(Dof dof) {
  return RigidMotion{Eigen::Matrix3d::Identity(), Eigen::Vector3d::Zero(), dof};
}

RigidMotion RigidMotion::rotation_z(double radians, Dof dof) {
  Eigen::Matrix3d r = Eigen::Matrix3d::Identity();
  const double c = std::cos(radians), s = std::sin(radians);
  r(0, 0) = c;
  r(0, 1) = -s;
  r(1, 0) = s;
  r(1, 1) = c;
  return RigidMotion{r, Eigen::Vector3d::Zero(), dof};
}

Eigen::Matrix4d RigidMotion::matrix() const {
  Eigen::Matrix4d m = Eigen::Matrix4d::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return m;
}

Point apply(const RigidMotion& motion, const Point& p) {
  return motion.rotation * p + motion.translation;
}

RigidMotion compose(const RigidMotion& a, const RigidMotion& b) {
  if (a.dof != b.dof)
    throw Error(Errc::bad_config, "compose: dof mismatch");
  return RigidMotion{a.rotation * b.rotation,
                     a.rotation * b.translation + a.translation, a.dof};
}

RigidMotion inverse(const RigidMotion& motion) {
  const Eigen::Matrix3d rt = motion.rotation.transpose();
  return RigidMotion{rt, -(rt * motion.translation), motion.dof};
}

double rotation_angle(const Eigen::Matrix3d& rotation) {
  const double c = std::clamp((rotation.trace() - 1.0) * 0.5, -1.0, 1.0);
  return std::acos(c);
}

std::pair<double, double> pose_error(const RigidMotion& est,
                                     const RigidMotion& gt) {
  if (est.dof != gt.dof)
    throw Error(Errc::bad_config, "pose_error: dof mismatch");
  const double trans = (est.translation - gt.translation).norm();
  const double rot =
      rotation_angle(est.rotation * gt.rotation.transpose()) * kDegPerRad;
  return {trans, rot};
}

void write_transform(std::ostream& os, const RigidMotion& motion) {
  const Eigen::Matrix4d m = motion.matrix();
  const Eigen::IOFormat fmt(12, Eigen::DontAlignCols, " ", "\n");
  os << m.format(fmt) << "\n";
}

RigidMotion read_transform(std::istream& is, Dof dof) {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c)
      if (!(is >> m(r, c)))
        throw Error(Errc::parse, "transform: expected 16 numeric entries");
  return RigidMotion::make(m.topLeftCorner<3, 3>(), m.topRightCorner<3, 1>(),
                           dof);
}

}  // namespace pyreg
