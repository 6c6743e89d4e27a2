#pragma once

#include <array>
#include <span>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/kinematics.hpp"
#include "sparsebody/math.hpp"
#include "sparsebody/mocap.hpp"
#include "sparsebody/sim.hpp"

namespace sparsebody {

/// Weights and kernel sizes for [r(q), r(qd), r(x), r(xd), r_f].
struct RewardWeights {
  std::array<double, 5> w = {0.4, 0.1, 0.2, 0.1, 0.2};
  std::array<double, 5> k = {40.0, 0.3, 6.0, 2.0, 0.01};

  void validate() const;  // throws ConfigError
};

nlohmann::json reward_weights_to_json(const RewardWeights& w);
RewardWeights reward_weights_from_json(const nlohmann::json& j);

/// exp(-k * sum_j |sim_j - gt_j|^2). Throws DimensionMismatch.
double gaussian_kernel_term(const VecX& sim, const VecX& gt, double k);
double gaussian_kernel_term(std::span<const Vec3> sim, std::span<const Vec3> gt, double k);

/// exp(-k_f * sum_i max(0, prev_i - now_i)) over vertical foot forces [N].
/// Throws NegativeForce.
double contact_smoothness_term(const Eigen::Vector2d& prev, const Eigen::Vector2d& now, double k_f);

/// Vertical components of the left/right foot forces.
inline Eigen::Vector2d vertical_foot_forces(const CharacterState& s) {
  return {s.foot_forces[0].y(), s.foot_forces[1].y()};
}

/// Cartesian positions compared by r(x): the root link in world coordinates,
/// every other link relative to the floor point under its own root. Yaw is
/// kept, so heading errors show up in the limb positions while horizontal
/// drift is only counted once, through the root.
std::array<Vec3, kNumLinks> reward_positions(const LinkStates& links);

struct RewardTerms {
  std::array<double, 5> terms{};
  double total = 0.0;
};

/// Imitation reward against a ground-truth frame on the same skeleton.
RewardTerms imitation_reward(const CharacterState& state, const FullBodyFrame& gt,
                             const ScaledSkeleton& skeleton, const Eigen::Vector2d& prev_forces,
                             const Eigen::Vector2d& now_forces, const RewardWeights& weights);

/// Same, with the ground-truth link states already computed.
RewardTerms imitation_reward(const CharacterState& state, const FullBodyFrame& gt,
                             const LinkStates& gt_links, const Eigen::Vector2d& prev_forces,
                             const Eigen::Vector2d& now_forces, const RewardWeights& weights);

}  // namespace sparsebody
