#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/kinematics.hpp"
#include "sparsebody/math.hpp"
#include "sparsebody/skeleton.hpp"

namespace sparsebody {

inline constexpr double kControlRate = 36.0;
inline constexpr int kClipFormatVersion = 1;

struct FullBodyFrame {
  Vec3 root_position = Vec3::Zero();
  Quat root_orientation = Quat::Identity();
  VecX q = VecX::Zero(kNumDofs);
  Vec3 root_linear_velocity = Vec3::Zero();   // world [m/s]
  Vec3 root_angular_velocity = Vec3::Zero();  // world [rad/s]
  VecX qd = VecX::Zero(kNumDofs);

  Pose root() const { return {root_position, root_orientation}; }
};

/// Fixed-rate full-body reference motion on the canonical skeleton.
struct MotionClip {
  std::string name;
  double frame_rate = kControlRate;
  double subject_height = 1.75;
  std::vector<FullBodyFrame> frames;

  double duration() const {
    return frames.empty() ? 0.0 : static_cast<double>(frames.size() - 1) / frame_rate;
  }
  /// Throws FormatError when rate, length, quaternion norms or sizes are invalid.
  void validate() const;
};

/// Forward differences at the clip rate; the last frame repeats the previous one.
void compute_velocities(MotionClip& clip);

/// Linear interpolation of positions and angles, slerp for the root rotation.
MotionClip resample_clip(const MotionClip& clip, double target_rate);

/// Projects joint angles onto the skeleton's joint limits.
void clamp_to_limits(VecX& q, const SkeletonSpec& spec);

struct SensorFrame {
  Pose head;
  Pose left;
  Pose right;
};

enum class TraceSource { kSynthetic, kRecorded };

struct SensorTrace {
  double frame_rate = kControlRate;
  std::vector<SensorFrame> frames;
  TraceSource source = TraceSource::kSynthetic;
};

/// Device poses implied by a set of link frames and the skeleton's offsets.
SensorFrame sensor_frame_from_links(const LinkFrames& links, const SensorOffsets& offsets);

/// Headset and controller poses from ground-truth head and hand links. No noise.
SensorTrace synthesize_sensors(const MotionClip& clip, const ScaledSkeleton& skeleton);

// Canonical clip container (JSON) and sensor trace (JSON lines).
nlohmann::json clip_to_json(const MotionClip& clip);
MotionClip clip_from_json(const nlohmann::json& j);
std::string serialize_clip(const MotionClip& clip);
MotionClip parse_clip(const std::string& text);
void save_clip(const MotionClip& clip, const std::string& path);
MotionClip load_clip(const std::string& path);

std::string serialize_trace(const SensorTrace& trace);
SensorTrace parse_trace(const std::string& text);
void save_trace(const SensorTrace& trace, const std::string& path);
SensorTrace load_trace(const std::string& path);

// Procedural clips bundled for training and tests. All start upright.
MotionClip make_standing_clip(const ScaledSkeleton& skeleton, double seconds = 12.0);
MotionClip make_walk_clip(const ScaledSkeleton& skeleton, double seconds = 6.0);
MotionClip make_arm_raise_clip(const ScaledSkeleton& skeleton, double seconds = 6.0);

}  // namespace sparsebody
