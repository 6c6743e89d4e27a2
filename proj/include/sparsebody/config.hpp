#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "sparsebody/rl.hpp"

namespace sparsebody {

/// Everything a training run depends on. Relative paths are resolved against
/// the directory of the config file.
struct ExperimentConfig {
  std::string skeleton;            // skeleton JSON; empty selects the built-in skeleton
  std::vector<std::string> clips;  // canonical clip files
  TrackingEnvConfig env;
  PpoConfig ppo;
  std::uint64_t seed = 1;
  std::string output_dir = "runs/desk";
  int iterations = 1000;
  int checkpoint_interval = 100;

  std::filesystem::path base_dir;  // not serialised

  std::filesystem::path resolve(const std::string& p) const;
  /// Throws ConfigError on a bad value or a missing file.
  void validate() const;
};

nlohmann::json experiment_config_to_json(const ExperimentConfig& c);
ExperimentConfig experiment_config_from_json(const nlohmann::json& j, std::filesystem::path base_dir = {});
ExperimentConfig load_experiment_config(const std::string& path);

/// FNV-1a 64-bit hash of the canonical config dump, as 16 hex digits. Keys
/// that do not change the training trajectory are excluded: output directory,
/// iteration budget, checkpoint interval and thread count.
std::string config_hash(const ExperimentConfig& c);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace sparsebody
