#pragma once

#include <array>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/math.hpp"

namespace sparsebody {

inline constexpr int kNumLinks = 16;
inline constexpr int kNumDofs = 33;
inline constexpr int kSkeletonFormatVersion = 1;

/// Canonical link indices. Parents always precede children.
enum Link : int {
  kPelvis = 0,
  kTorso,
  kChest,
  kHead,
  kLeftUpperArm,
  kLeftForearm,
  kLeftHand,
  kRightUpperArm,
  kRightForearm,
  kRightHand,
  kLeftThigh,
  kLeftShin,
  kLeftFoot,
  kRightThigh,
  kRightShin,
  kRightFoot,
};

/// Capsule in link coordinates; `axis` is the cylinder direction (0=X, 1=Y, 2=Z).
struct Capsule {
  Vec3 center = Vec3::Zero();
  int axis = 1;
  double radius = 0.0;
  double half_length = 0.0;

  /// Centres of the two end spheres, in link coordinates.
  std::array<Vec3, 2> end_centers() const {
    return {center - half_length * Vec3::Unit(axis), center + half_length * Vec3::Unit(axis)};
  }
};

struct LinkSpec {
  std::string name;
  int parent = -1;
  Vec3 offset = Vec3::Zero();  // joint position in the parent link frame [m]
  Vec3 com = Vec3::Zero();     // centre of mass in the link frame [m]
  double mass = 0.0;           // [kg]
  Vec3 inertia = Vec3::Zero();  // principal moments about the COM, link axes [kg m^2]
  Capsule capsule;
};

/// Joint connecting `link` to its parent. Multi-DoF joints are successive
/// rotations about the listed link-frame axes (intrinsic order).
struct JointSpec {
  std::string name;
  int link = 0;
  std::vector<int> axes;
  std::vector<double> lower;  // [rad]
  std::vector<double> upper;  // [rad]
  double torque_limit = 200.0;  // [N m], per DoF

  int dof() const { return static_cast<int>(axes.size()); }
};

/// Device frames relative to the head link (headset) and hand links (controllers).
struct SensorOffsets {
  Pose head;
  Pose left;
  Pose right;
};

struct SkeletonSpec {
  int version = kSkeletonFormatVersion;
  std::vector<LinkSpec> links;
  std::vector<JointSpec> joints;  // joints[i].link == i + 1
  int dof_count = 0;
  double reference_height = 1.75;  // [m]
  /// Body height divided by head-joint height in the standing A-pose.
  double head_height_ratio = 1.0;
  /// Head must exceed every other link origin by this fraction of its height.
  double standing_margin = 0.02;
  /// Shoulder abduction of the calibration A-pose [rad].
  double apose_shoulder_abduction = 0.6;
  SensorOffsets sensors;

  /// Throws InvalidSkeleton when a structural invariant fails.
  void validate() const;

  int link_index(const std::string& name) const;
  /// First generalized-coordinate index of the joint driving `link` (link >= 1).
  int dof_start(int link) const;
  const JointSpec& joint_of(int link) const { return joints.at(link - 1); }
  double total_mass() const;
};

SkeletonSpec build_default_skeleton();

/// Uniformly scaled instance: lengths, masses, inertias and collision
/// geometry are all multiplied by `scale`.
struct ScaledSkeleton {
  SkeletonSpec spec;
  double scale = 1.0;
  std::vector<LinkSpec> links;
  SensorOffsets sensors;

  double height() const { return scale * spec.reference_height; }
  double total_mass() const;
};

struct HeightBounds {
  double min = 1.0;
  double max = 2.5;
};

ScaledSkeleton scale_skeleton(const SkeletonSpec& spec, double user_height,
                              HeightBounds bounds = {});

/// Root pose and joint angles of the standing calibration pose, with the
/// lowest foot collision point resting on the ground plane.
struct AposeConfiguration {
  Pose root;
  VecX q;
};
AposeConfiguration apose_configuration(const ScaledSkeleton& skeleton);

/// Height from world link positions of a standing first frame.
double estimate_height_from_apose(std::span<const Vec3> link_positions, const SkeletonSpec& spec);

nlohmann::json skeleton_to_json(const SkeletonSpec& spec);
SkeletonSpec skeleton_from_json(const nlohmann::json& j);
SkeletonSpec load_skeleton(const std::string& path);
void save_skeleton(const SkeletonSpec& spec, const std::string& path);

}  // namespace sparsebody
