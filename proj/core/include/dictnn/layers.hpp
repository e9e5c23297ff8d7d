#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dictnn/rng.hpp"
#include "dictnn/tensor.hpp"

namespace dictnn {

// Training mode selects batch statistics in batch norm; update_running_stats
// can be cleared to make the forward pass a pure function of the parameters
// (required by finite-difference gradient checking).
struct ForwardContext {
    bool training = false;
    bool update_running_stats = true;
};

template <typename T>
struct ParamRef {
    std::string name;       // e.g. "conv1.weight"
    Tensor<T>* value;
    Tensor<T>* grad;        // nullptr for non-trainable tensors
    bool trainable;
};

template <typename T>
class Layer {
  public:
    explicit Layer(std::string label) : label_(std::move(label)) {}
    virtual ~Layer() = default;

    virtual Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) = 0;
    // Accumulates into parameter gradients and returns dLoss/dInput.
    virtual Tensor<T> backward(const Tensor<T>& dy) = 0;
    virtual void collect_params(std::vector<ParamRef<T>>&) {}
    virtual const char* kind() const = 0;

    const std::string& label() const { return label_; }

  protected:
    std::string label_;
};

// 1D convolution, kernel 3, stride 1, zero padding 1: length-preserving.
template <typename T>
class Conv1d final : public Layer<T> {
  public:
    Conv1d(std::string label, std::size_t in_channels, std::size_t out_channels,
           Rng& init_rng);
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(std::vector<ParamRef<T>>& out) override;
    const char* kind() const override { return "conv1d"; }

  private:
    std::size_t in_, out_;
    Tensor<T> w_, b_, gw_, gb_;
    Tensor<T> x_;
};

// 2D convolution, kernel 3x3, stride 1, zero padding 1: shape-preserving.
template <typename T>
class Conv2d final : public Layer<T> {
  public:
    Conv2d(std::string label, std::size_t in_channels, std::size_t out_channels,
           Rng& init_rng);
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(std::vector<ParamRef<T>>& out) override;
    const char* kind() const override { return "conv2d"; }

  private:
    std::size_t in_, out_;
    Tensor<T> w_, b_, gw_, gb_;
    Tensor<T> x_;
};

// Channel-wise batch normalization over (B, C, spatial...). Training mode
// normalizes with biased batch variance and updates running statistics with
// the unbiased estimate (momentum 0.1); evaluation mode uses running stats.
template <typename T>
class BatchNorm final : public Layer<T> {
  public:
    static constexpr double kEps = 1e-5;
    static constexpr double kMomentum = 0.1;

    BatchNorm(std::string label, std::size_t channels);
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(std::vector<ParamRef<T>>& out) override;
    const char* kind() const override { return "batchnorm"; }

  private:
    std::size_t channels_;
    Tensor<T> gamma_, beta_, ggamma_, gbeta_;
    Tensor<T> running_mean_, running_var_;
    // backward caches
    Tensor<T> xhat_;
    std::vector<double> invstd_;
    std::size_t batch_ = 0, spatial_ = 0;
    bool used_batch_stats_ = false;
};

template <typename T>
class ReLU final : public Layer<T> {
  public:
    explicit ReLU(std::string label) : Layer<T>(std::move(label)) {}
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    const char* kind() const override { return "relu"; }

  private:
    Tensor<T> x_;
};

template <typename T>
class Flatten final : public Layer<T> {
  public:
    explicit Flatten(std::string label) : Layer<T>(std::move(label)) {}
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    const char* kind() const override { return "flatten"; }

  private:
    std::vector<std::size_t> in_shape_;
};

template <typename T>
class Linear final : public Layer<T> {
  public:
    Linear(std::string label, std::size_t in_features, std::size_t out_features,
           Rng& init_rng);
    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx) override;
    Tensor<T> backward(const Tensor<T>& dy) override;
    void collect_params(std::vector<ParamRef<T>>& out) override;
    const char* kind() const override { return "linear"; }

  private:
    std::size_t in_, out_;
    Tensor<T> w_, b_, gw_, gb_;
    Tensor<T> x_;
};

}  // namespace dictnn
