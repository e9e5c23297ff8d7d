#pragma once

#include <array>
#include <vector>

#include "dictnn/tensor.hpp"

namespace dictnn {

template <typename T>
struct LossResult {
    double value = 0.0;
    Tensor<T> dlogits;
};

// Weighted multi-class cross entropy over logits (B, 3). Per-sample loss is
// -w_y * log softmax(logits)_y; the batch loss is the weighted mean (divided
// by the sum of the selected weights), so unit weights reduce to the plain
// mean. The returned gradient matches that normalization.
template <typename T>
LossResult<T> cross_entropy_weighted(const Tensor<T>& logits,
                                     const std::vector<int>& targets,
                                     const std::array<double, 3>& class_weights);

}  // namespace dictnn
