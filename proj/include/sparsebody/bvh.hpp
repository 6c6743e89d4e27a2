#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "sparsebody/math.hpp"
#include "sparsebody/mocap.hpp"
#include "sparsebody/skeleton.hpp"

namespace sparsebody {

enum class BvhChannel { kXposition, kYposition, kZposition, kXrotation, kYrotation, kZrotation };

struct BvhJoint {
  std::string name;
  int parent = -1;
  Vec3 offset = Vec3::Zero();
  std::vector<BvhChannel> channels;
  int channel_offset = 0;  // index of the first channel in a frame row
  bool has_end_site = false;
  Vec3 end_site = Vec3::Zero();
};

struct BvhMotion {
  std::vector<BvhJoint> joints;  // depth-first declaration order
  double frame_time = 0.0;
  int channel_count = 0;
  std::vector<std::vector<double>> frames;

  int joint_index(const std::string& name) const;
};

struct BvhGlobal {
  Vec3 position = Vec3::Zero();
  Mat3 rotation = Mat3::Identity();
};

/// Strict HIERARCHY/MOTION grammar, whitespace-insensitive.
/// Throws ParseError (with line/column) or UnsupportedChannelOrder.
BvhMotion parse_bvh(std::string_view text);

/// Local rotation of a joint: product of its rotation channels in channel order.
Mat3 bvh_local_rotation(const BvhJoint& joint, const std::vector<double>& frame);

/// World transforms of every joint for one frame (no unit scaling).
std::vector<BvhGlobal> bvh_global_transforms(const BvhMotion& motion, int frame);

/// BVH rendering of a canonical clip on `skeleton` (rest pose = zero pose).
std::string write_bvh(const MotionClip& clip, const ScaledSkeleton& skeleton);

/// Canonical link -> source joint names, plus the source length unit in meters.
struct JointMapping {
  std::array<std::string, kNumLinks> source;
  double length_scale = 1.0;
};

JointMapping canonical_mapping(const SkeletonSpec& spec);
JointMapping load_mapping(const std::string& path);

struct RetargetOptions {
  double target_rate = kControlRate;
};

/// Maps a BVH motion onto the canonical skeleton, resamples it to the target
/// rate and estimates the subject height from the first frame.
MotionClip retarget_to_canonical(const BvhMotion& motion, const SkeletonSpec& spec,
                                 const JointMapping& mapping, const RetargetOptions& options = {});

}  // namespace sparsebody
