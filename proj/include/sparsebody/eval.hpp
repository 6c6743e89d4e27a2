#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/kinematics.hpp"
#include "sparsebody/mocap.hpp"
#include "sparsebody/rl.hpp"

namespace sparsebody {

/// World link frames sampled at a fixed rate.
struct Trajectory {
  double frame_rate = kControlRate;
  std::vector<LinkFrames> frames;
};

Trajectory trajectory_from_clip(const MotionClip& clip, const ScaledSkeleton& skeleton);
Trajectory trajectory_from_states(const std::vector<CharacterState>& states, double frame_rate);

// Every metric throws LengthMismatch when the trajectories differ in length.

/// Mean distance of the 15 non-root joints, each taken relative to its own
/// trajectory's root [cm].
double mpjpe(const Trajectory& sim, const Trajectory& gt);
/// Mean geodesic angle of the joint rotations over all 16 links [deg]:
/// the pelvis in world axes, every other link relative to its parent.
double mpjre(const Trajectory& sim, const Trajectory& gt, const SkeletonSpec& spec);
/// Mean pelvis position error [cm].
double root_error(const Trajectory& sim, const Trajectory& gt);
/// Mean global orientation error of both upper arms and thighs [deg].
double sip_error(const Trajectory& sim, const Trajectory& gt);
/// Mean norm of the third difference of joint positions times rate^3 [km/s^3].
/// Throws TooShort below 4 frames.
double jitter(const Trajectory& traj);

struct DeviceErrors {
  double position_cm = 0.0;
  double rotation_deg = 0.0;
};
/// Headset and controller poses implied by the trajectory versus the trace.
DeviceErrors device_errors(const Trajectory& sim, const SensorOffsets& offsets, const SensorTrace& trace);

struct Metrics {
  double mpjre = 0.0;   // deg
  double mpjpe = 0.0;   // cm
  double root_e = 0.0;  // cm
  double sip = 0.0;     // deg
  double jitter = 0.0;  // km/s^3
  double mhpe = 0.0;    // cm
  double mhre = 0.0;    // deg
};

Metrics compute_metrics(const Trajectory& sim, const Trajectory& gt, const ScaledSkeleton& skeleton,
                        const SensorTrace& trace);

struct ClipReport {
  std::string name;
  int frames = 0;
  bool fell = false;
  Metrics metrics;
};

struct MetricsReport {
  std::string sensors = "H+2C";  // "H" when the controllers were masked
  std::string checkpoint;        // config hash of the evaluated checkpoint, or "oracle"
  double frame_rate = kControlRate;
  std::vector<ClipReport> clips;
  Metrics mean;  // frame-weighted over clips
};

/// Fills `mean` from the clips.
void aggregate(MetricsReport& report);

nlohmann::json metrics_report_to_json(const MetricsReport& report);
/// Plain-text table with one row per metric and one column per clip plus the mean.
std::string metrics_table(const MetricsReport& report);

/// Deterministic rollout of the whole clip from its first frame, without early
/// termination. A null policy replays the ground truth.
ClipReport evaluate_clip(const GaussianPolicy<float>* policy,
                         const std::shared_ptr<const std::vector<TrackingTask>>& tasks, std::size_t task,
                         const TrackingEnvConfig& config);

}  // namespace sparsebody
