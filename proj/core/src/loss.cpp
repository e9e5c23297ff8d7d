#include "dictnn/loss.hpp"

#include <cmath>
#include <stdexcept>

namespace dictnn {

template <typename T>
LossResult<T> cross_entropy_weighted(const Tensor<T>& logits,
                                     const std::vector<int>& targets,
                                     const std::array<double, 3>& class_weights) {
    if (logits.shape.size() != 2 || logits.shape[1] != 3) {
        throw std::runtime_error("cross entropy: logits must be (B, 3), got " +
                                 shape_to_string(logits.shape));
    }
    const std::size_t B = logits.shape[0];
    if (targets.size() != B) {
        throw std::runtime_error("cross entropy: got " + std::to_string(targets.size()) +
                                 " targets for batch of " + std::to_string(B));
    }
    for (double w : class_weights) {
        if (!(w > 0.0)) throw std::runtime_error("cross entropy: weights must be > 0");
    }

    LossResult<T> result;
    result.dlogits = Tensor<T>(logits.shape);

    double weight_sum = 0.0;
    for (std::size_t b = 0; b < B; ++b) {
        const int y = targets[b];
        if (y < 0 || y > 2) {
            throw std::runtime_error("cross entropy: target out of range: " +
                                     std::to_string(y));
        }
        weight_sum += class_weights[static_cast<std::size_t>(y)];
    }

    double loss_sum = 0.0;
    for (std::size_t b = 0; b < B; ++b) {
        const T* row = logits.ptr() + b * 3;
        const int y = targets[b];
        const double w = class_weights[static_cast<std::size_t>(y)];

        double m = row[0];
        for (int c = 1; c < 3; ++c) m = std::max(m, static_cast<double>(row[c]));
        double sum_exp = 0.0;
        double e[3];
        for (int c = 0; c < 3; ++c) {
            e[c] = std::exp(static_cast<double>(row[c]) - m);
            sum_exp += e[c];
        }
        const double lse = m + std::log(sum_exp);
        loss_sum += w * (lse - static_cast<double>(row[y]));

        T* drow = result.dlogits.ptr() + b * 3;
        for (int c = 0; c < 3; ++c) {
            const double softmax = e[c] / sum_exp;
            const double onehot = c == y ? 1.0 : 0.0;
            drow[c] = static_cast<T>(w * (softmax - onehot) / weight_sum);
        }
    }
    result.value = loss_sum / weight_sum;
    return result;
}

template LossResult<float> cross_entropy_weighted<float>(
    const Tensor<float>&, const std::vector<int>&, const std::array<double, 3>&);
template LossResult<double> cross_entropy_weighted<double>(
    const Tensor<double>&, const std::vector<int>&, const std::array<double, 3>&);

}  // namespace dictnn
