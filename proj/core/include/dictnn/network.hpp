#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "dictnn/layers.hpp"
#include "dictnn/tensor.hpp"

namespace dictnn {

// Fixed sequential stack. Instances are single-writer: forward, backward and
// optimizer steps must not run concurrently on the same instance.
template <typename T>
class Network {
  public:
    Network(std::string architecture, std::vector<std::unique_ptr<Layer<T>>> layers)
        : architecture_(std::move(architecture)), layers_(std::move(layers)) {}

    Network(Network&&) noexcept = default;
    Network& operator=(Network&&) noexcept = default;

    Tensor<T> forward(const Tensor<T>& x, const ForwardContext& ctx);
    // Requires a prior forward on the same batch; returns dLoss/dInput.
    Tensor<T> backward(const Tensor<T>& dlogits);

    void zero_grad();
    std::vector<ParamRef<T>> params();
    std::size_t param_count();   // trainable elements only
    std::size_t layer_count() const { return layers_.size(); }

    struct LayerTrace {
        std::string label;
        std::string kind;
        std::vector<std::size_t> out_shape;
        std::size_t trainable_params;
    };
    // Runs forward, recording each layer's output shape and parameter count.
    std::vector<LayerTrace> forward_trace(const Tensor<T>& x, const ForwardContext& ctx);

    const std::string& architecture() const { return architecture_; }

  private:
    std::string architecture_;
    std::vector<std::unique_ptr<Layer<T>>> layers_;
    bool forwarded_ = false;
};

// Three conv(+BN+ReLU) blocks over (B,1,120), widths 16/32/64, then
// Linear(7680 -> 3). 31,107 trainable parameters.
template <typename T>
Network<T> build_model_1d(std::uint64_t seed);

// Same stack with 3x3 convolutions over (B,1,2,120) and Linear(15360 -> 3).
// 69,603 trainable parameters.
template <typename T>
Network<T> build_model_2d(std::uint64_t seed);

// architecture id "1d" or "2d"; anything else is an error.
template <typename T>
Network<T> build_model(const std::string& architecture, std::uint64_t seed);

}  // namespace dictnn
