#include "dictnn/optimizer.hpp"

#include <cmath>
#include <stdexcept>

namespace dictnn {

OptimizerRule optimizer_rule_from_string(std::string_view name) {
    if (name == "sgd") return OptimizerRule::Sgd;
    if (name == "rmsprop") return OptimizerRule::RmsProp;
    if (name == "adam") return OptimizerRule::Adam;
    throw std::runtime_error("unknown optimizer '" + std::string(name) +
                             "' (expected sgd, rmsprop or adam)");
}

const char* to_string(OptimizerRule rule) {
    switch (rule) {
        case OptimizerRule::Sgd: return "sgd";
        case OptimizerRule::RmsProp: return "rmsprop";
        case OptimizerRule::Adam: return "adam";
    }
    return "?";
}

template <typename T>
void Optimizer<T>::step(const std::vector<ParamRef<T>>& params) {
    if (first_.empty() && rule_ != OptimizerRule::Sgd) {
        for (const ParamRef<T>& p : params) {
            first_.emplace_back(p.trainable ? Tensor<T>(p.value->shape) : Tensor<T>());
            if (rule_ == OptimizerRule::Adam) {
                second_.emplace_back(p.trainable ? Tensor<T>(p.value->shape)
                                                 : Tensor<T>());
            }
        }
    }
    ++step_;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const ParamRef<T>& p = params[i];
        if (!p.trainable) continue;
        T* v = p.value->ptr();
        const T* g = p.grad->ptr();
        const std::size_t n = p.value->size();
        switch (rule_) {
            case OptimizerRule::Sgd:
                for (std::size_t j = 0; j < n; ++j) {
                    v[j] -= static_cast<T>(lr_ * g[j]);
                }
                break;
            case OptimizerRule::RmsProp: {
                T* sq = first_[i].ptr();
                for (std::size_t j = 0; j < n; ++j) {
                    const double gj = g[j];
                    const double s = kRmsDecay * sq[j] + (1.0 - kRmsDecay) * gj * gj;
                    sq[j] = static_cast<T>(s);
                    v[j] -= static_cast<T>(lr_ * gj / (std::sqrt(s) + kEps));
                }
                break;
            }
            case OptimizerRule::Adam: {
                T* m = first_[i].ptr();
                T* vv = second_[i].ptr();
                const double bc1 = 1.0 - std::pow(kAdamBeta1, static_cast<double>(step_));
                const double bc2 = 1.0 - std::pow(kAdamBeta2, static_cast<double>(step_));
                for (std::size_t j = 0; j < n; ++j) {
                    const double gj = g[j];
                    const double mj = kAdamBeta1 * m[j] + (1.0 - kAdamBeta1) * gj;
                    const double vj = kAdamBeta2 * vv[j] + (1.0 - kAdamBeta2) * gj * gj;
                    m[j] = static_cast<T>(mj);
                    vv[j] = static_cast<T>(vj);
                    const double mhat = mj / bc1;
                    const double vhat = vj / bc2;
                    v[j] -= static_cast<T>(lr_ * mhat / (std::sqrt(vhat) + kEps));
                }
                break;
            }
        }
    }
}

double PlateauScheduler::step(double metric, double lr) {
    if (metric > best_ + min_delta_) {
        best_ = metric;
        bad_epochs_ = 0;
        return lr;
    }
    ++bad_epochs_;
    if (bad_epochs_ > patience_) {
        bad_epochs_ = 0;
        return lr * factor_;
    }
    return lr;
}

template class Optimizer<float>;
template class Optimizer<double>;

}  // namespace dictnn
