#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>

namespace sparsebody {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;
using Vec6 = Eigen::Matrix<double, 6, 1>;
using Mat6 = Eigen::Matrix<double, 6, 6>;
using VecX = Eigen::VectorXd;
using MatX = Eigen::MatrixXd;

inline constexpr double kPi = 3.14159265358979323846;

/// World is Y-up; characters face +Z in their canonical orientation.
inline const Vec3 kUp = Vec3::UnitY();
inline const Vec3 kForward = Vec3::UnitZ();

/// Rigid transform: x_world = rotation * x_local + position.
struct Pose {
  Vec3 position = Vec3::Zero();
  Quat rotation = Quat::Identity();

  Pose operator*(const Pose& rhs) const {
    return {position + rotation * rhs.position, (rotation * rhs.rotation).normalized()};
  }
  Vec3 apply(const Vec3& local) const { return position + rotation * local; }
  Pose inverse() const {
    Quat inv = rotation.conjugate();
    return {-(inv * position), inv};
  }
};

inline Mat3 skew(const Vec3& v) {
  Mat3 m;
  m << 0.0, -v.z(), v.y(), v.z(), 0.0, -v.x(), -v.y(), v.x(), 0.0;
  return m;
}

inline Mat3 axis_rotation(int axis, double angle) {
  return Eigen::AngleAxisd(angle, Vec3::Unit(axis)).toRotationMatrix();
}

inline Mat3 yaw_rotation(double yaw) { return axis_rotation(1, yaw); }

/// Unit quaternion for the rotation vector `v` (axis * angle).
inline Quat quat_exp(const Vec3& v) {
  const double angle = v.norm();
  if (angle < 1e-12) {
    Quat q(1.0, 0.5 * v.x(), 0.5 * v.y(), 0.5 * v.z());
    return q.normalized();
  }
  return Quat(Eigen::AngleAxisd(angle, v / angle));
}

/// Rotation vector of `q`, angle in [0, pi].
inline Vec3 quat_log(const Quat& q_in) {
  Quat q = q_in.normalized();
  if (q.w() < 0.0) q.coeffs() *= -1.0;
  const Vec3 im = q.vec();
  const double s = im.norm();
  if (s < 1e-12) return 2.0 * im;
  const double angle = 2.0 * std::atan2(s, q.w());
  return im * (angle / s);
}

/// Smallest angle (radians) of the relative rotation between `a` and `b`.
inline double geodesic_angle(const Quat& a, const Quat& b) {
  const Quat d = a.normalized().conjugate() * b.normalized();
  return 2.0 * std::atan2(d.vec().norm(), std::abs(d.w()));
}

inline double geodesic_angle(const Mat3& a, const Mat3& b) {
  return geodesic_angle(Quat(a), Quat(b));
}

/// Intrinsic Tait-Bryan decomposition R = R_a0(t0) R_a1(t1) R_a2(t2) for a
/// permutation (a0, a1, a2) of {0, 1, 2}; the middle angle lies in [-pi/2, pi/2].
inline Vec3 tait_bryan_angles(const Mat3& r, int a0, int a1, int a2) {
  // Parity of the permutation decides the signs.
  const bool even = ((a1 - a0 + 3) % 3) == 1;
  const double sgn = even ? 1.0 : -1.0;
  const double s1 = std::clamp(sgn * r(a0, a2), -1.0, 1.0);
  Vec3 out;
  out[1] = std::asin(s1);
  if (std::abs(s1) < 1.0 - 1e-12) {
    out[0] = std::atan2(-sgn * r(a1, a2), r(a2, a2));
    out[2] = std::atan2(-sgn * r(a0, a1), r(a0, a0));
  } else {
    // Gimbal lock: put the whole residual on the first axis.
    out[2] = 0.0;
    out[0] = std::atan2(sgn * r(a2, a1), r(a1, a1));
  }
  return out;
}

inline double wrap_angle(double a) {
  a = std::fmod(a + kPi, 2.0 * kPi);
  if (a < 0.0) a += 2.0 * kPi;
  return a - kPi;
}

}  // namespace sparsebody
