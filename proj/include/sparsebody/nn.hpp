#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sparsebody/rng.hpp"

namespace sparsebody {

enum class OutputActivation { kLinear, kTanh };

/// Fully connected tanh network with a flat parameter vector.
/// Layer l stores W_l (out x in, column-major) followed by b_l.
/// Inputs and outputs are batched as columns.
template <typename Scalar>
class Mlp {
 public:
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// Activations recorded by forward() for backward().
  struct Tape {
    std::vector<Matrix> activations;  // layer inputs, then the final pre-scale output
  };

  Mlp() = default;
  /// `sizes` = [input, hidden..., output]. The output is `output_scale * act(W h + b)`.
  Mlp(std::vector<int> sizes, OutputActivation output, Scalar output_scale = Scalar(1));

  const std::vector<int>& sizes() const { return sizes_; }
  int input_size() const { return sizes_.front(); }
  int output_size() const { return sizes_.back(); }
  int num_layers() const { return static_cast<int>(sizes_.size()) - 1; }
  Eigen::Index num_params() const { return params_.size(); }
  OutputActivation output_activation() const { return output_; }
  Scalar output_scale() const { return scale_; }

  Vector& params() { return params_; }
  const Vector& params() const { return params_; }

  Eigen::Map<const Matrix> weight(int layer) const;
  Eigen::Map<const Vector> bias(int layer) const;
  Eigen::Map<Matrix> weight(int layer);
  Eigen::Map<Vector> bias(int layer);

  /// Orthogonal weights (gain sqrt(2), `final_gain` on the last layer), zero biases.
  void init_orthogonal(Rng& rng, double final_gain);

  /// Throws ShapeMismatch when x.rows() != input_size().
  Matrix forward(const Matrix& x, Tape* tape = nullptr) const;
  Vector forward_one(const Vector& x) const;

  /// Adds dL/dparams to `grad` given dL/doutput for the batch recorded in `tape`.
  void backward(const Tape& tape, const Matrix& d_output, Vector& grad) const;

  template <typename Other>
  Mlp<Other> cast() const {
    Mlp<Other> out(sizes_, output_, static_cast<Other>(scale_));
    out.params() = params_.template cast<Other>();
    return out;
  }

 private:
  std::vector<int> sizes_;
  OutputActivation output_ = OutputActivation::kLinear;
  Scalar scale_ = Scalar(1);
  std::vector<Eigen::Index> offsets_;  // start of W_l; b_l follows
  Vector params_;
};

extern template class Mlp<float>;
extern template class Mlp<double>;

inline constexpr double kExplorationSigma = 0.03;

/// Diagonal Gaussian around the tanh-squashed mean; noise is added after the tanh.
template <typename Scalar>
struct GaussianPolicy {
  Mlp<Scalar> mean;
  double sigma = kExplorationSigma;
};

/// sum_i log N(action_i; mean_i, sigma^2)
template <typename Derived1, typename Derived2>
double gaussian_log_prob(const Eigen::MatrixBase<Derived1>& action,
                         const Eigen::MatrixBase<Derived2>& mean, double sigma) {
  const double d = static_cast<double>((action - mean).template cast<double>().squaredNorm());
  return -0.5 * d / (sigma * sigma) -
         static_cast<double>(action.size()) * (std::log(sigma) + 0.5 * std::log(2.0 * 3.14159265358979323846));
}

struct ActionSample {
  Eigen::VectorXd action;
  Eigen::VectorXd mean;
  double log_prob = 0.0;
};

/// action = mean + sigma * eps. With `deterministic`, action = mean and no draw is made.
template <typename Scalar>
ActionSample sample_action(const GaussianPolicy<Scalar>& policy, const Eigen::VectorXd& obs,
                           Rng& rng, bool deterministic = false);

/// Samples one action per column of `means`; draws in column order.
std::vector<ActionSample> sample_actions(const Eigen::MatrixXd& means, double sigma, Rng& rng,
                                         bool deterministic = false);

/// Standard [400, 300, 200] networks over `input` features.
GaussianPolicy<float> make_policy(int input, int actions, Rng& rng, double sigma = kExplorationSigma);
Mlp<float> make_value_net(int input, float output_scale, Rng& rng);

template <typename Scalar>
class Adam {
 public:
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  Adam() = default;
  Adam(Eigen::Index n, double lr, double beta1 = 0.9, double beta2 = 0.999, double eps = 1e-5)
      : lr_(lr), beta1_(beta1), beta2_(beta2), eps_(eps), m_(Vector::Zero(n)), v_(Vector::Zero(n)) {}

  void step(Vector& params, const Vector& grad) {
    ++t_;
    m_ = Scalar(beta1_) * m_ + Scalar(1 - beta1_) * grad;
    v_ = Scalar(beta2_) * v_ + Scalar(1 - beta2_) * grad.cwiseProduct(grad);
    const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(t_));
    const Scalar step_size = static_cast<Scalar>(lr_ * std::sqrt(c2) / c1);
    const Scalar eps = static_cast<Scalar>(eps_ * std::sqrt(c2));
    params.array() -= step_size * m_.array() / (v_.array().sqrt() + eps);
  }

  double learning_rate() const { return lr_; }
  std::int64_t steps() const { return t_; }
  Vector& first_moment() { return m_; }
  Vector& second_moment() { return v_; }
  const Vector& first_moment() const { return m_; }
  const Vector& second_moment() const { return v_; }
  void set_steps(std::int64_t t) { t_ = t; }

 private:
  double lr_ = 1e-4, beta1_ = 0.9, beta2_ = 0.999, eps_ = 1e-5;
  std::int64_t t_ = 0;
  Vector m_, v_;
};

/// Everything needed to evaluate or resume training.
struct Checkpoint {
  GaussianPolicy<float> policy;
  Mlp<float> value;
  Adam<float> policy_opt, value_opt;
  int obs_layout_version = 0;
  std::string config_hash;
  std::int64_t iteration = 0;
  std::int64_t samples = 0;
  std::uint64_t seed = 0;
  std::string rng_state;  // serialized trainer generator
};

/// Binary container: "SBCK", format version, JSON header, raw little-endian floats.
void save_checkpoint(const std::string& path, const Checkpoint& ckpt);
/// Throws FormatError on a malformed file and LayoutVersionMismatch when
/// `expected_layout` >= 0 and differs from the stored version.
Checkpoint load_checkpoint(const std::string& path, int expected_layout = -1);

}  // namespace sparsebody
