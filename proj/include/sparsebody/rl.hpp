#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/mocap.hpp"
#include "sparsebody/nn.hpp"
#include "sparsebody/obs.hpp"
#include "sparsebody/reward.hpp"
#include "sparsebody/sim.hpp"

namespace sparsebody {

struct PpoConfig {
  double gamma = 0.97;
  double lambda = 0.95;
  double clip = 0.2;
  double learning_rate = 1e-4;
  int n_envs = 64;
  int rollout_steps = 15;
  int minibatches = 4;
  int epochs = 5;
  double value_coef = 0.5;
  double entropy_coef = 0.0;   // sigma is fixed, so the entropy bonus is a constant
  double max_grad_norm = 0.0;  // 0 disables clipping
  bool normalize_advantages = true;
  double adam_eps = 1e-5;
  double exploration_sigma = kExplorationSigma;
  int threads = 1;

  int batch_size() const { return n_envs * rollout_steps; }
  void validate() const;  // throws ConfigError
};

nlohmann::json ppo_config_to_json(const PpoConfig& c);
PpoConfig ppo_config_from_json(const nlohmann::json& j);

struct GaeResult {
  Eigen::VectorXd advantages;
  Eigen::VectorXd returns;
};

/// Single trajectory segment: V(s_{t+1}) is values[t+1], or `bootstrap` at the end.
/// A done flag both zeroes the bootstrap and cuts the recursion. Throws LengthMismatch.
GaeResult compute_gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                      const std::vector<std::uint8_t>& dones, double bootstrap, double gamma,
                      double lambda);

/// General form. `terminals` zero the bootstrap from next_values[t];
/// `episode_ends` (terminal or truncated) cut the recursion.
GaeResult compute_gae(const Eigen::VectorXd& rewards, const Eigen::VectorXd& values,
                      const Eigen::VectorXd& next_values, const std::vector<std::uint8_t>& terminals,
                      const std::vector<std::uint8_t>& episode_ends, double gamma, double lambda);

struct EnvStep {
  Eigen::VectorXd obs;  // observation of the state reached by the step
  double reward = 0.0;
  bool terminal = false;   // no bootstrap
  bool truncated = false;  // time limit; bootstrap from obs
  bool diverged = false;   // simulator blew up; reported as terminal with zero reward
};

class Env {
 public:
  virtual ~Env() = default;
  virtual int obs_dim() const = 0;
  virtual int action_dim() const = 0;
  virtual Eigen::VectorXd reset(Rng& rng) = 0;
  virtual EnvStep step(const Eigen::VectorXd& action, Rng& rng) = 0;
};

/// One-step episodes; a negative action picks arm 0, which pays 1. Arm 1 pays 0.
class BanditEnv : public Env {
 public:
  int obs_dim() const override { return 1; }
  int action_dim() const override { return 1; }
  Eigen::VectorXd reset(Rng&) override { return Eigen::VectorXd::Ones(1); }
  EnvStep step(const Eigen::VectorXd& action, Rng& rng) override;
};

/// A reference clip prepared for tracking on its subject's skeleton.
struct TrackingTask {
  MotionClip clip;
  SensorTrace trace;
  ScaledSkeleton skeleton;
  std::vector<LinkStates> gt_links;  // per frame
};

TrackingTask make_tracking_task(MotionClip clip, const SkeletonSpec& spec);

struct TrackingEnvConfig {
  SimConfig sim;
  RewardWeights reward;
  double torque_scale = 200.0;       // [N m] per unit action
  double fall_height_ratio = 0.3;    // head below this fraction of body height ends the episode; 0 disables
  double reward_floor = 0.1;
  int reward_floor_steps = 10;
  bool random_start = true;          // reference-state initialisation
  int max_episode_steps = 0;         // 0: until the clip ends
  ObservationOptions obs;

  void validate() const;
};

nlohmann::json tracking_env_config_to_json(const TrackingEnvConfig& c);
TrackingEnvConfig tracking_env_config_from_json(const nlohmann::json& j);

enum class EpisodeEnd { kNone, kFell, kLowReward, kDiverged, kClipEnd };
const char* episode_end_name(EpisodeEnd e);

/// Torque-controlled character imitating clips while observing their synthetic sensors.
class TrackingEnv : public Env {
 public:
  TrackingEnv(std::shared_ptr<const std::vector<TrackingTask>> tasks, TrackingEnvConfig config);

  int obs_dim() const override { return kObsDim; }
  int action_dim() const override { return kNumDofs; }
  Eigen::VectorXd reset(Rng& rng) override;
  EnvStep step(const Eigen::VectorXd& action, Rng& rng) override;

  /// Starts clip `task` at `frame` without drawing from a generator.
  Eigen::VectorXd reset_to(std::size_t task, std::size_t frame);

  const CharacterState& state() const { return state_; }
  std::size_t task_index() const { return task_; }
  std::size_t frame_index() const { return t_; }
  EpisodeEnd last_end() const { return last_end_; }
  const RewardTerms& last_terms() const { return last_terms_; }

 private:
  Eigen::VectorXd observe();

  std::shared_ptr<const std::vector<TrackingTask>> tasks_;
  TrackingEnvConfig config_;
  std::vector<Simulator> sims_;
  CharacterState state_;
  HeadingTracker heading_;
  std::size_t task_ = 0, t_ = 0, start_ = 0;
  int low_reward_steps_ = 0;
  Eigen::Vector2d prev_forces_ = Eigen::Vector2d::Zero();
  EpisodeEnd last_end_ = EpisodeEnd::kNone;
  RewardTerms last_terms_;
};

/// Transitions ordered by (env, step): column e * steps + t.
struct RolloutBatch {
  int n_envs = 0;
  int steps = 0;
  Eigen::MatrixXf obs;
  Eigen::MatrixXd actions;
  Eigen::VectorXd log_probs, rewards, values, next_values;
  std::vector<std::uint8_t> terminals, episode_ends;
  Eigen::VectorXd advantages, returns;
  std::vector<double> episode_returns;  // episodes finished during this rollout
  std::vector<int> episode_lengths;
  int diverged = 0;

  int size() const { return n_envs * steps; }
  void compute_advantages(double gamma, double lambda);
};

/// Steps a set of environments in lock-step with batched network evaluation.
/// Each environment owns a generator, so results do not depend on `threads`.
class VecEnv {
 public:
  VecEnv(std::vector<std::unique_ptr<Env>> envs, std::uint64_t seed, int threads = 1);

  int size() const { return static_cast<int>(envs_.size()); }
  Env& env(int i) { return *envs_[static_cast<std::size_t>(i)]; }

  RolloutBatch collect(const GaussianPolicy<float>& policy, const Mlp<float>& value, int steps);

  /// Fresh generators and fresh episodes for every environment.
  void reseed(std::uint64_t seed);

 private:
  std::vector<std::unique_ptr<Env>> envs_;
  std::vector<Rng> rngs_;
  std::vector<Eigen::VectorXd> obs_;
  std::vector<double> episode_return_;
  std::vector<int> episode_length_;
  int threads_;
};

struct PolicyLossStats {
  double mean_ratio = 0.0;
  double max_ratio_error = 0.0;  // max |ratio - 1|
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
};

/// -mean(min(r A, clip(r, 1 - eps, 1 + eps) A)), r = exp(log pi - log pi_old).
/// Adds the parameter gradient to `grad` when given.
template <typename Scalar>
double clipped_policy_loss(const GaussianPolicy<Scalar>& policy,
                           const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& obs,
                           const Eigen::MatrixXd& actions, const Eigen::VectorXd& old_log_probs,
                           const Eigen::VectorXd& advantages, double clip,
                           Eigen::Matrix<Scalar, Eigen::Dynamic, 1>* grad,
                           PolicyLossStats* stats = nullptr);

/// coef * mean((V - target)^2)
template <typename Scalar>
double value_loss(const Mlp<Scalar>& value,
                  const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& obs,
                  const Eigen::VectorXd& targets, double coef,
                  Eigen::Matrix<Scalar, Eigen::Dynamic, 1>* grad);

struct PpoStats {
  double policy_loss = 0.0;
  double value_loss = 0.0;
  double mean_ratio = 0.0;
  double clip_fraction = 0.0;
  double approx_kl = 0.0;
  double first_ratio_error = 0.0;  // max |ratio - 1| on epoch 0, minibatch 0
};

/// Epochs of shuffled minibatch updates. Throws NonFiniteLoss and leaves
/// every network and optimiser untouched when a loss or gradient is not finite.
PpoStats ppo_update(GaussianPolicy<float>& policy, Mlp<float>& value, Adam<float>& policy_opt,
                    Adam<float>& value_opt, const RolloutBatch& batch, const PpoConfig& config,
                    Rng& rng);

struct IterationLog {
  std::int64_t iteration = 0;
  std::int64_t samples = 0;
  double mean_reward = 0.0;
  double mean_episode_return = 0.0;
  double mean_episode_length = 0.0;
  int episodes = 0;
  int diverged = 0;
  PpoStats ppo;
};

nlohmann::json iteration_log_to_json(const IterationLog& log);

/// Collect/update loop over a fixed set of environments.
class Trainer {
 public:
  Trainer(PpoConfig config, std::vector<std::unique_ptr<Env>> envs, std::uint64_t seed,
          std::string config_hash);

  IterationLog iterate();

  std::int64_t iteration() const { return iteration_; }
  const GaussianPolicy<float>& policy() const { return policy_; }
  GaussianPolicy<float>& policy() { return policy_; }
  const Mlp<float>& value() const { return value_; }

  Checkpoint checkpoint() const;
  /// Networks, optimisers, iteration and trainer generator come from `ckpt`.
  /// Environments restart from fresh episodes seeded by (seed, iteration).
  void restore(const Checkpoint& ckpt);

 private:
  PpoConfig config_;
  std::uint64_t seed_;
  std::string config_hash_;
  int obs_dim_, action_dim_;
  std::unique_ptr<VecEnv> vec_;
  GaussianPolicy<float> policy_;
  Mlp<float> value_;
  Adam<float> policy_opt_, value_opt_;
  Rng rng_;
  std::int64_t iteration_ = 0;
  std::int64_t samples_ = 0;
};

/// Deterministic (policy mean) episode from a fixed clip frame.
struct TrackingRollout {
  std::vector<CharacterState> states;  // includes the initial state
  std::vector<double> rewards;
  EpisodeEnd end = EpisodeEnd::kNone;
  int steps = 0;
};

TrackingRollout run_tracking_episode(const GaussianPolicy<float>& policy,
                                     std::shared_ptr<const std::vector<TrackingTask>> tasks,
                                     std::size_t task, TrackingEnvConfig config,
                                     std::size_t start_frame = 0, int max_steps = 0);

/// Calibration pose under a headset pose: the device implied by the pose sits
/// directly below or above it and shares its heading; feet rest on the ground.
CharacterState apose_under_headset(const ScaledSkeleton& skeleton, const Pose& headset);

/// Deterministic rollout driven by a sensor trace alone, starting from the
/// calibration pose under the first headset pose. One state per trace frame
/// unless the simulator diverges first.
std::vector<CharacterState> run_sensor_rollout(const GaussianPolicy<float>& policy, const SensorTrace& trace,
                                               const ScaledSkeleton& skeleton, const TrackingEnvConfig& config);

/// Simulated states as a canonical clip.
MotionClip clip_from_states(const std::vector<CharacterState>& states, std::string name, double frame_rate,
                            double subject_height);

/// Seed of generator `index` derived from a base seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace sparsebody
