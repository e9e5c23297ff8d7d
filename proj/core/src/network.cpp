#include "dictnn/network.hpp"

#include <stdexcept>

namespace dictnn {

template <typename T>
Tensor<T> Network<T>::forward(const Tensor<T>& x, const ForwardContext& ctx) {
    Tensor<T> cur = x;
    for (auto& layer : layers_) cur = layer->forward(cur, ctx);
    forwarded_ = true;
    return cur;
}

template <typename T>
Tensor<T> Network<T>::backward(const Tensor<T>& dlogits) {
    if (!forwarded_) {
        throw std::logic_error("network: backward called before forward");
    }
    Tensor<T> cur = dlogits;
    for (auto it = layers_.rbegin(); it != layers_.rend(); ++it) {
        cur = (*it)->backward(cur);
    }
    return cur;
}

template <typename T>
void Network<T>::zero_grad() {
    for (ParamRef<T>& p : params()) {
        if (p.grad) {
            for (T& g : p.grad->data) g = T(0);
        }
    }
}

template <typename T>
std::vector<ParamRef<T>> Network<T>::params() {
    std::vector<ParamRef<T>> out;
    for (auto& layer : layers_) layer->collect_params(out);
    return out;
}

template <typename T>
std::size_t Network<T>::param_count() {
    std::size_t n = 0;
    for (const ParamRef<T>& p : params()) {
        if (p.trainable) n += p.value->size();
    }
    return n;
}

template <typename T>
std::vector<typename Network<T>::LayerTrace> Network<T>::forward_trace(
    const Tensor<T>& x, const ForwardContext& ctx) {
    std::vector<LayerTrace> trace;
    Tensor<T> cur = x;
    for (auto& layer : layers_) {
        cur = layer->forward(cur, ctx);
        std::vector<ParamRef<T>> ps;
        layer->collect_params(ps);
        std::size_t n = 0;
        for (const auto& p : ps) {
            if (p.trainable) n += p.value->size();
        }
        trace.push_back({layer->label(), layer->kind(), cur.shape, n});
    }
    forwarded_ = true;
    return trace;
}

namespace {

template <typename T>
void push_block_1d(std::vector<std::unique_ptr<Layer<T>>>& layers, int index,
                   std::size_t in_ch, std::size_t out_ch, Rng& rng) {
    const std::string i = std::to_string(index);
    layers.push_back(std::make_unique<Conv1d<T>>("conv" + i, in_ch, out_ch, rng));
    layers.push_back(std::make_unique<BatchNorm<T>>("bn" + i, out_ch));
    layers.push_back(std::make_unique<ReLU<T>>("relu" + i));
}

template <typename T>
void push_block_2d(std::vector<std::unique_ptr<Layer<T>>>& layers, int index,
                   std::size_t in_ch, std::size_t out_ch, Rng& rng) {
    const std::string i = std::to_string(index);
    layers.push_back(std::make_unique<Conv2d<T>>("conv" + i, in_ch, out_ch, rng));
    layers.push_back(std::make_unique<BatchNorm<T>>("bn" + i, out_ch));
    layers.push_back(std::make_unique<ReLU<T>>("relu" + i));
}

}  // namespace

template <typename T>
Network<T> build_model_1d(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::unique_ptr<Layer<T>>> layers;
    push_block_1d<T>(layers, 1, 1, 16, rng);
    push_block_1d<T>(layers, 2, 16, 32, rng);
    push_block_1d<T>(layers, 3, 32, 64, rng);
    layers.push_back(std::make_unique<Flatten<T>>("flatten"));
    layers.push_back(std::make_unique<Linear<T>>("linear", 64 * 120, 3, rng));
    return Network<T>("1d", std::move(layers));
}

template <typename T>
Network<T> build_model_2d(std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::unique_ptr<Layer<T>>> layers;
    push_block_2d<T>(layers, 1, 1, 16, rng);
    push_block_2d<T>(layers, 2, 16, 32, rng);
    push_block_2d<T>(layers, 3, 32, 64, rng);
    layers.push_back(std::make_unique<Flatten<T>>("flatten"));
    layers.push_back(std::make_unique<Linear<T>>("linear", 64 * 2 * 120, 3, rng));
    return Network<T>("2d", std::move(layers));
}

template <typename T>
Network<T> build_model(const std::string& architecture, std::uint64_t seed) {
    if (architecture == "1d") return build_model_1d<T>(seed);
    if (architecture == "2d") return build_model_2d<T>(seed);
    throw std::runtime_error("unknown architecture '" + architecture +
                             "' (expected 1d or 2d)");
}

template class Network<float>;
template class Network<double>;
template Network<float> build_model_1d<float>(std::uint64_t);
template Network<double> build_model_1d<double>(std::uint64_t);
template Network<float> build_model_2d<float>(std::uint64_t);
template Network<double> build_model_2d<double>(std::uint64_t);
template Network<float> build_model<float>(const std::string&, std::uint64_t);
template Network<double> build_model<double>(const std::string&, std::uint64_t);

}  // namespace dictnn
