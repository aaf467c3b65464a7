#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Geometry>

namespace rearr::geom {

// Rigid transform: rotation as a unit quaternion plus translation in meters.
struct Pose {
  Eigen::Quaterniond rotation = Eigen::Quaterniond::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  Pose() = default;
  Pose(const Eigen::Quaterniond& q, const Eigen::Vector3d& t)
      : rotation(q.normalized()), translation(t) {}

  static Pose identity() { return Pose(); }

  static Pose from_translation(const Eigen::Vector3d& t) {
    return Pose(Eigen::Quaterniond::Identity(), t);
  }

  static Pose from_axis_angle(const Eigen::Vector3d& axis, double angle,
                              const Eigen::Vector3d& t = Eigen::Vector3d::Zero()) {
    return Pose(Eigen::Quaterniond(Eigen::AngleAxisd(angle, axis.normalized())), t);
  }

  static Pose from_yaw(double yaw, const Eigen::Vector3d& t = Eigen::Vector3d::Zero()) {
    return from_axis_angle(Eigen::Vector3d::UnitZ(), yaw, t);
  }

  Eigen::Vector3d apply(const Eigen::Vector3d& p) const { return rotation * p + translation; }

  Pose compose(const Pose& other) const {
    return Pose(rotation * other.rotation, rotation * other.translation + translation);
  }

  Pose operator*(const Pose& other) const { return compose(other); }

  Pose inverse() const {
    const Eigen::Quaterniond qi = rotation.conjugate();
    return Pose(qi, qi * (-translation));
  }

  Eigen::Matrix3d matrix() const { return rotation.toRotationMatrix(); }

  bool approx_equal(const Pose& other, double tol = 1e-9) const {
    const double dq = std::min((rotation.coeffs() - other.rotation.coeffs()).norm(),
                               (rotation.coeffs() + other.rotation.coeffs()).norm());
    return dq <= tol && (translation - other.translation).norm() <= tol;
  }
};

// Angle of the relative rotation between two quaternions, radians.
inline double rotation_distance(const Eigen::Quaterniond& a, const Eigen::Quaterniond& b) {
  const double d = std::min(1.0, std::abs(a.dot(b)));
  return 2.0 * std::acos(d);
}

// N points in meters in a declared frame.
struct PointCloud {
  std::vector<Eigen::Vector3d> points;
  std::string frame = "scene";

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }

  bool all_finite() const {
    for (const auto& p : points)
      if (!p.allFinite()) return false;
    return true;
  }
};

PointCloud transform_points(const Pose& pose, const PointCloud& pc);

// Axis-aligned box.
struct Aabb {
  Eigen::Vector3d min = Eigen::Vector3d::Constant(std::numeric_limits<double>::max());
  Eigen::Vector3d max = Eigen::Vector3d::Constant(std::numeric_limits<double>::lowest());

  bool valid() const { return (min.array() <= max.array()).all(); }

  void expand(const Eigen::Vector3d& p) {
    min = min.cwiseMin(p);
    max = max.cwiseMax(p);
  }

  void expand(const Aabb& b) {
    min = min.cwiseMin(b.min);
    max = max.cwiseMax(b.max);
  }

  Aabb inflated(double r) const {
    Aabb b = *this;
    b.min.array() -= r;
    b.max.array() += r;
    return b;
  }

  Eigen::Vector3d center() const { return 0.5 * (min + max); }
  Eigen::Vector3d extent() const { return max - min; }

  bool overlaps(const Aabb& b) const {
    return (min.array() <= b.max.array()).all() && (b.min.array() <= max.array()).all();
  }

  bool contains(const Eigen::Vector3d& p) const {
    return (p.array() >= min.array()).all() && (p.array() <= max.array()).all();
  }

  double distance_sq(const Eigen::Vector3d& p) const {
    const Eigen::Vector3d d =
        (min - p).cwiseMax(0.0).cwiseMax(p - max);
    return d.squaredNorm();
  }

  // AABB of this box under a rigid transform (conservative: box of the 8 corners).
  Aabb transformed(const Pose& pose) const {
    Aabb out;
    for (int i = 0; i < 8; ++i) {
      const Eigen::Vector3d c((i & 1) ? max.x() : min.x(), (i & 2) ? max.y() : min.y(),
                              (i & 4) ? max.z() : min.z());
      out.expand(pose.apply(c));
    }
    return out;
  }
};

}  // namespace rearr::geom
