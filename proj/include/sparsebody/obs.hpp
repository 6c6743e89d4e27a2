#pragma once

#include <optional>
#include <span>
#include <vector>

#include "sparsebody/math.hpp"
#include "sparsebody/mocap.hpp"
#include "sparsebody/sim.hpp"

namespace sparsebody {

inline constexpr int kObsLayoutVersion = 1;
inline constexpr int kFutureFrames = 6;
inline constexpr int kSimObsDim = 312;
inline constexpr int kUserObsDim = 162;
inline constexpr int kObsDim = kSimObsDim + kUserObsDim + 1;

/// Index ranges of the observation vector (layout version 1).
struct ObsBlock {
  int begin;
  int size;
};
namespace obs_layout {
inline constexpr ObsBlock kJointAngles{0, kNumDofs};
inline constexpr ObsBlock kJointVelocities{33, kNumDofs};
inline constexpr ObsBlock kLinkPositions{66, 3 * kNumLinks};
inline constexpr ObsBlock kLinkRotations{114, 6 * kNumLinks};
inline constexpr ObsBlock kLinkVelocities{210, 6 * kNumLinks};  // per link: linear, angular
inline constexpr ObsBlock kFootForces{306, 6};                   // left, right
/// Per future frame (t+1 .. t+6) and device (head, left, right): position, 6D rotation.
inline constexpr ObsBlock kUser{312, kUserObsDim};
inline constexpr ObsBlock kScale{474, 1};
}  // namespace obs_layout

/// Columns 0 and 1 of the rotation matrix, concatenated.
Vec6 encode_rotation_6d(const Mat3& r);
/// Gram-Schmidt on the two stored columns; the third is their cross product.
Mat3 decode_rotation_6d(const Vec6& v);

/// Yaw-only frame on the floor under the avatar root.
struct HeadingFrame {
  Vec3 origin = Vec3::Zero();
  double yaw = 0.0;  // rotation about +Y taking +Z to the heading direction

  Mat3 rotation() const { return yaw_rotation(yaw); }
  Vec3 point_to_local(const Vec3& p) const { return rotation().transpose() * (p - origin); }
  Vec3 vector_to_local(const Vec3& v) const { return rotation().transpose() * v; }
  Mat3 rotation_to_local(const Mat3& r) const { return rotation().transpose() * r; }
};

/// Heading of a root pose. Throws DegenerateHeading when the root's forward
/// axis is (nearly) vertical.
HeadingFrame compute_heading_frame(const Pose& root);
HeadingFrame compute_heading_frame(const CharacterState& state);

/// Keeps the last valid yaw and uses it when the current root is degenerate.
class HeadingTracker {
 public:
  HeadingFrame update(const Pose& root);
  void reset() { last_.reset(); }

 private:
  std::optional<double> last_;
};

struct ObservationOptions {
  /// Replace controller slots of the user block with `mask_value`.
  bool headset_only = false;
  double mask_value = 0.0;
};

/// Observation of layout kObsLayoutVersion: o_sim, o_user, o_scale, all in `frame`.
VecX build_observation(const CharacterState& state, std::span<const SensorFrame> future,
                       double scale, const HeadingFrame& frame,
                       const ObservationOptions& options = {});
VecX build_observation(const CharacterState& state, std::span<const SensorFrame> future,
                       double scale, const ObservationOptions& options = {});

/// Sensor frames t+1 .. t+6. Throws InsufficientFuture past the end unless
/// `pad` is set, in which case the final frame is repeated.
std::vector<SensorFrame> future_window(const SensorTrace& trace, std::size_t t, bool pad = true);

/// Fixed per-entry multipliers applied to observations before the networks.
const VecX& observation_scaling();

}  // namespace sparsebody
