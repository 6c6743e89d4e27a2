#pragma once

#include <array>

#include "sparsebody/math.hpp"
#include "sparsebody/skeleton.hpp"

namespace sparsebody {

struct LinkFrame {
  Vec3 position = Vec3::Zero();  // joint origin of the link, world [m]
  Mat3 rotation = Mat3::Identity();
};

/// World kinematics of one link; the linear velocity is that of the link origin.
struct LinkState {
  Vec3 position = Vec3::Zero();
  Mat3 rotation = Mat3::Identity();
  Vec3 linear_velocity = Vec3::Zero();
  Vec3 angular_velocity = Vec3::Zero();
};

using LinkFrames = std::array<LinkFrame, kNumLinks>;
using LinkStates = std::array<LinkState, kNumLinks>;

/// Link world frames for root pose + joint angles (q has kNumDofs entries).
LinkFrames forward_kinematics(const ScaledSkeleton& skeleton, const Pose& root, const VecX& q);

/// Link world frames and velocities. Root velocities are world frame; the
/// root linear velocity is that of the pelvis origin.
LinkStates link_states(const ScaledSkeleton& skeleton, const Pose& root, const VecX& q,
                       const Vec3& root_linear_velocity, const Vec3& root_angular_velocity,
                       const VecX& qd);

/// World pose of a point rigidly attached to a link frame.
inline Pose attached_pose(const LinkFrame& link, const Pose& offset) {
  Pose out;
  out.position = link.position + link.rotation * offset.position;
  out.rotation = Quat(link.rotation * offset.rotation.toRotationMatrix()).normalized();
  return out;
}

}  // namespace sparsebody
