#include "dictnn/gradcheck.hpp"

#include <algorithm>
#include <cmath>

#include "dictnn/loss.hpp"

namespace dictnn {

namespace {

template <typename T>
double loss_at(Network<T>& net, const Tensor<T>& batch, const std::vector<int>& targets,
               const std::array<double, 3>& weights) {
    ForwardContext ctx{/*training=*/true, /*update_running_stats=*/false};
    Tensor<T> logits = net.forward(batch, ctx);
    return cross_entropy_weighted(logits, targets, weights).value;
}

}  // namespace

template <typename T>
double gradient_check(Network<T>& net, const Tensor<T>& batch,
                      const std::vector<int>& targets,
                      const std::array<double, 3>& class_weights, Rng& rng,
                      std::size_t sample_size, double eps) {
    net.zero_grad();
    ForwardContext ctx{/*training=*/true, /*update_running_stats=*/false};
    Tensor<T> logits = net.forward(batch, ctx);
    LossResult<T> loss = cross_entropy_weighted(logits, targets, class_weights);
    net.backward(loss.dlogits);

    std::vector<ParamRef<T>> params = net.params();
    struct Slot {
        std::size_t param;
        std::size_t elem;
    };
    std::vector<Slot> slots;
    std::size_t total = 0;
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (params[i].trainable) total += params[i].value->size();
    }
    if (total <= sample_size) {
        for (std::size_t i = 0; i < params.size(); ++i) {
            if (!params[i].trainable) continue;
            for (std::size_t j = 0; j < params[i].value->size(); ++j) {
                slots.push_back({i, j});
            }
        }
    } else {
        for (std::size_t k = 0; k < sample_size; ++k) {
            std::uint64_t r = rng.below(total);
            for (std::size_t i = 0; i < params.size(); ++i) {
                if (!params[i].trainable) continue;
                if (r < params[i].value->size()) {
                    slots.push_back({i, static_cast<std::size_t>(r)});
                    break;
                }
                r -= params[i].value->size();
            }
        }
    }

    double max_rel = 0.0;
    for (const Slot& s : slots) {
        T* cell = params[s.param].value->ptr() + s.elem;
        const T original = *cell;
        const T step = static_cast<T>(eps);

        *cell = original + step;
        const double plus = loss_at(net, batch, targets, class_weights);
        *cell = original - step;
        const double minus = loss_at(net, batch, targets, class_weights);
        *cell = original;

        const double numeric = (plus - minus) / (2.0 * static_cast<double>(step));
        const double analytic = params[s.param].grad->data[s.elem];
        const double denom =
            std::max({std::abs(analytic), std::abs(numeric), 1e-8});
        max_rel = std::max(max_rel, std::abs(analytic - numeric) / denom);
    }
    return max_rel;
}

template double gradient_check<float>(Network<float>&, const Tensor<float>&,
                                      const std::vector<int>&,
                                      const std::array<double, 3>&, Rng&, std::size_t,
                                      double);
template double gradient_check<double>(Network<double>&, const Tensor<double>&,
                                       const std::vector<int>&,
                                       const std::array<double, 3>&, Rng&, std::size_t,
                                       double);

}  // namespace dictnn
