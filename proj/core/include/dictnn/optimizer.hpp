#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dictnn/layers.hpp"
#include "dictnn/tensor.hpp"

namespace dictnn {

enum class OptimizerRule { Sgd, RmsProp, Adam };

OptimizerRule optimizer_rule_from_string(std::string_view name);
const char* to_string(OptimizerRule rule);

// Per-parameter state keyed by position, so step() must always be called with
// the same network's parameter list.
template <typename T>
class Optimizer {
  public:
    static constexpr double kAdamBeta1 = 0.9;
    static constexpr double kAdamBeta2 = 0.999;
    static constexpr double kRmsDecay = 0.99;
    static constexpr double kEps = 1e-8;

    Optimizer(OptimizerRule rule, double lr) : rule_(rule), lr_(lr) {}

    void step(const std::vector<ParamRef<T>>& params);

    double lr() const { return lr_; }
    void set_lr(double lr) { lr_ = lr; }
    long step_count() const { return step_; }
    OptimizerRule rule() const { return rule_; }

  private:
    OptimizerRule rule_;
    double lr_;
    long step_ = 0;
    std::vector<Tensor<T>> first_;   // Adam m / RMSprop square average
    std::vector<Tensor<T>> second_;  // Adam v
};

// Reduce-on-plateau for a higher-is-better metric: after more than `patience`
// consecutive epochs without an improvement of at least `min_delta`, the
// learning rate is multiplied by `factor` and the counter resets.
class PlateauScheduler {
  public:
    explicit PlateauScheduler(double factor = 0.1, int patience = 5,
                              double min_delta = 1e-4)
        : factor_(factor), patience_(patience), min_delta_(min_delta) {}

    double step(double metric, double lr);

    double best() const { return best_; }

  private:
    double factor_;
    int patience_;
    double min_delta_;
    double best_ = -1e300;
    int bad_epochs_ = 0;
};

}  // namespace dictnn
