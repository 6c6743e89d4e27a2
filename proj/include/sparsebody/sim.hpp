#pragma once

#include <array>
#include <memory>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/kinematics.hpp"
#include "sparsebody/math.hpp"
#include "sparsebody/mocap.hpp"
#include "sparsebody/skeleton.hpp"

namespace sparsebody {

/// Simulated avatar: floating pelvis plus 33 joint coordinates.
struct CharacterState {
  Vec3 root_position = Vec3::Zero();
  Quat root_orientation = Quat::Identity();
  Vec3 root_linear_velocity = Vec3::Zero();   // pelvis origin, world [m/s]
  Vec3 root_angular_velocity = Vec3::Zero();  // world [rad/s]
  VecX q = VecX::Zero(kNumDofs);
  VecX qd = VecX::Zero(kNumDofs);

  LinkStates links;  // derived from the fields above
  /// Mean ground force on the left and right foot over the last control step, world [N].
  std::array<Vec3, 2> foot_forces = {Vec3::Zero(), Vec3::Zero()};

  Pose root() const { return {root_position, root_orientation}; }
};

struct SimConfig {
  double control_dt = 1.0 / 36.0;  // [s]
  int substeps = 2;
  double joint_friction = 0.1;  // viscous joint damping [N m s/rad]
  /// Reflected rotor inertia added to every joint coordinate [kg m^2].
  double joint_armature = 0.1;
  double static_friction = 1.0;
  double dynamic_friction = 1.0;
  /// Only 0 is supported: the penalty contact is overdamped.
  double restitution = 0.0;
  double contact_stiffness = 5.0e4;      // [N/m] per contact sphere
  double contact_damping = 2.0e3;        // [N s/m]
  double tangential_damping = 2.0e4;     // sticking regularisation [N s/m]
  double limit_stiffness = 1.0e3;        // joint-limit spring [N m/rad]
  double limit_damping = 10.0;           // [N m s/rad]
  int contact_iterations = 6;
  Vec3 gravity = Vec3(0.0, -9.81, 0.0);
  bool all_link_collision = false;
  bool fixed_root = false;
  std::vector<int> locked_dofs;  // joint coordinates held at their current value
  double velocity_guard = 1.0e4;

  double substep_dt() const { return control_dt / substeps; }
  /// Throws ConfigError on an invalid value.
  void validate() const;
};

nlohmann::json sim_config_to_json(const SimConfig& c);
SimConfig sim_config_from_json(const nlohmann::json& j);

/// Recomputes `links` from the generalized state.
void update_link_states(CharacterState& state, const ScaledSkeleton& skeleton);

/// State matching a reference frame's pose and velocity; contact forces zeroed.
CharacterState reset_from_frame(const FullBodyFrame& frame, const ScaledSkeleton& skeleton);

/// Linear momentum of the whole body, world [kg m/s].
Vec3 linear_momentum(const CharacterState& state, const ScaledSkeleton& skeleton);

/// Torque-driven articulated body on a flat ground plane (y = 0).
///
/// Dynamics are reduced-coordinate: the joint-space mass matrix comes from the
/// composite-rigid-body algorithm and the bias forces from recursive
/// Newton-Euler, both in world-frame spatial coordinates. Each substep is
/// semi-implicit Euler with joint damping, joint-limit springs and the
/// spring-damper ground contact linearised implicitly in the new velocity.
/// Contacts iterate between sticking and Coulomb sliding; the resulting
/// forces are then applied explicitly so the recorded forces are exactly the
/// applied ones. The root linear velocity is corrected after each substep so
/// the body's linear momentum changes by exactly the external impulse.
class Simulator {
 public:
  Simulator(ScaledSkeleton skeleton, SimConfig config);
  ~Simulator();
  Simulator(Simulator&&) noexcept;
  Simulator& operator=(Simulator&&) noexcept;

  /// Advances one control step. Torques are clamped to each joint's limit.
  /// Throws NumericalDivergence when the state leaves the velocity guard.
  CharacterState step(const CharacterState& state, const VecX& torques);

  const ScaledSkeleton& skeleton() const;
  const SimConfig& config() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-shot convenience wrapper around Simulator::step.
CharacterState step(const CharacterState& state, const VecX& torques, const SimConfig& config,
                    const ScaledSkeleton& skeleton);

}  // namespace sparsebody
