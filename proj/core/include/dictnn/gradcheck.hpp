#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "dictnn/network.hpp"
#include "dictnn/rng.hpp"
#include "dictnn/tensor.hpp"

namespace dictnn {

// Compares analytic gradients against central finite differences
// (f(p+eps) - f(p-eps)) / (2 eps) on `sample_size` randomly chosen trainable
// parameters (all of them when the net is smaller). The forward passes run in
// training mode with running-statistic updates frozen, so the loss is a pure
// function of the parameters. Returns the maximum relative error with
// denominator max(|analytic|, |numeric|, 1e-8).
//
// Meaningful tolerances require T = double; float forward noise is of the
// same order as the eps=1e-3 difference quotient. On nets with ReLU layers
// prefer eps near 1e-5: the default step is wide enough for the difference
// window to straddle activation boundaries, where the quotient measures a
// chord across two linear pieces instead of the derivative.
template <typename T>
double gradient_check(Network<T>& net, const Tensor<T>& batch,
                      const std::vector<int>& targets,
                      const std::array<double, 3>& class_weights, Rng& rng,
                      std::size_t sample_size = 200, double eps = 1e-3);

}  // namespace dictnn
