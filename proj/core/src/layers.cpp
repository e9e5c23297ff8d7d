#include "dictnn/layers.hpp"

#include <cmath>
#include <stdexcept>

namespace dictnn {

namespace {

[[noreturn]] void shape_error(const std::string& label, const std::string& expected,
                              const std::vector<std::size_t>& got) {
    throw std::runtime_error(label + ": expected input " + expected + ", got " +
                             shape_to_string(got));
}

void require_cached(const std::string& label, bool has_cache) {
    if (!has_cache) {
        throw std::logic_error(label + ": backward called before forward");
    }
}

template <typename T>
void fill_uniform(Tensor<T>& t, Rng& rng, double bound) {
    for (T& v : t.data) v = static_cast<T>(rng.uniform(-bound, bound));
}

// y[0..n) += a * x[0..n)
template <typename T>
inline void axpy(std::size_t n, T a, const T* x, T* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

template <typename T>
inline double dot(std::size_t n, const T* x, const T* y) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += static_cast<double>(x[i]) * y[i];
    return s;
}

}  // namespace

// ---------------------------------------------------------------- Conv1d

template <typename T>
Conv1d<T>::Conv1d(std::string label, std::size_t in_channels, std::size_t out_channels,
                  Rng& init_rng)
    : Layer<T>(std::move(label)),
      in_(in_channels),
      out_(out_channels),
      w_({out_channels, in_channels, 3}),
      b_({out_channels}),
      gw_({out_channels, in_channels, 3}),
      gb_({out_channels}) {
    fill_uniform(w_, init_rng, 1.0 / std::sqrt(static_cast<double>(in_ * 3)));
}

template <typename T>
Tensor<T> Conv1d<T>::forward(const Tensor<T>& x, const ForwardContext&) {
    if (x.shape.size() != 3 || x.shape[1] != in_) {
        shape_error(this->label_, "(B, " + std::to_string(in_) + ", L)", x.shape);
    }
    x_ = x;
    const std::size_t B = x.shape[0], L = x.shape[2];
    Tensor<T> y({B, out_, L});
    for (std::size_t b = 0; b < B; ++b) {
        for (std::size_t co = 0; co < out_; ++co) {
            T* yrow = y.ptr() + (b * out_ + co) * L;
            const T bias = b_.data[co];
            for (std::size_t l = 0; l < L; ++l) yrow[l] = bias;
            for (std::size_t ci = 0; ci < in_; ++ci) {
                const T* xrow = x.ptr() + (b * in_ + ci) * L;
                const T* wk = w_.ptr() + (co * in_ + ci) * 3;
                // taps at offsets -1, 0, +1 with zero padding
                axpy(L - 1, wk[0], xrow, yrow + 1);
                axpy(L, wk[1], xrow, yrow);
                axpy(L - 1, wk[2], xrow + 1, yrow);
            }
        }
    }
    return y;
}

template <typename T>
Tensor<T> Conv1d<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !x_.empty());
    const std::size_t B = x_.shape[0], L = x_.shape[2];
    Tensor<T> dx(x_.shape);
    for (std::size_t b = 0; b < B; ++b) {
        for (std::size_t co = 0; co < out_; ++co) {
            const T* dyrow = dy.ptr() + (b * out_ + co) * L;
            double db = 0.0;
            for (std::size_t l = 0; l < L; ++l) db += dyrow[l];
            gb_.data[co] += static_cast<T>(db);
            for (std::size_t ci = 0; ci < in_; ++ci) {
                const T* xrow = x_.ptr() + (b * in_ + ci) * L;
                T* dxrow = dx.ptr() + (b * in_ + ci) * L;
                const T* wk = w_.ptr() + (co * in_ + ci) * 3;
                T* gwk = gw_.ptr() + (co * in_ + ci) * 3;
                // dx: transpose of the forward taps
                axpy(L - 1, wk[0], dyrow + 1, dxrow);
                axpy(L, wk[1], dyrow, dxrow);
                axpy(L - 1, wk[2], dyrow, dxrow + 1);
                // dw: correlations of dy with shifted input
                gwk[0] += static_cast<T>(dot(L - 1, dyrow + 1, xrow));
                gwk[1] += static_cast<T>(dot(L, dyrow, xrow));
                gwk[2] += static_cast<T>(dot(L - 1, dyrow, xrow + 1));
            }
        }
    }
    return dx;
}

template <typename T>
void Conv1d<T>::collect_params(std::vector<ParamRef<T>>& out) {
    out.push_back({this->label_ + ".weight", &w_, &gw_, true});
    out.push_back({this->label_ + ".bias", &b_, &gb_, true});
}

// ---------------------------------------------------------------- Conv2d

template <typename T>
Conv2d<T>::Conv2d(std::string label, std::size_t in_channels, std::size_t out_channels,
                  Rng& init_rng)
    : Layer<T>(std::move(label)),
      in_(in_channels),
      out_(out_channels),
      w_({out_channels, in_channels, 3, 3}),
      b_({out_channels}),
      gw_({out_channels, in_channels, 3, 3}),
      gb_({out_channels}) {
    fill_uniform(w_, init_rng, 1.0 / std::sqrt(static_cast<double>(in_ * 9)));
}

template <typename T>
Tensor<T> Conv2d<T>::forward(const Tensor<T>& x, const ForwardContext&) {
    if (x.shape.size() != 4 || x.shape[1] != in_) {
        shape_error(this->label_, "(B, " + std::to_string(in_) + ", H, W)", x.shape);
    }
    x_ = x;
    const std::size_t B = x.shape[0], H = x.shape[2], W = x.shape[3];
    Tensor<T> y({B, out_, H, W});
    for (std::size_t b = 0; b < B; ++b) {
        for (std::size_t co = 0; co < out_; ++co) {
            T* yplane = y.ptr() + (b * out_ + co) * H * W;
            const T bias = b_.data[co];
            for (std::size_t i = 0; i < H * W; ++i) yplane[i] = bias;
            for (std::size_t ci = 0; ci < in_; ++ci) {
                const T* xplane = x.ptr() + (b * in_ + ci) * H * W;
                const T* wk = w_.ptr() + (co * in_ + ci) * 9;
                for (std::size_t h = 0; h < H; ++h) {
                    T* yrow = yplane + h * W;
                    for (int dh = -1; dh <= 1; ++dh) {
                        const long hs = static_cast<long>(h) + dh;
                        if (hs < 0 || hs >= static_cast<long>(H)) continue;
                        const T* xrow = xplane + static_cast<std::size_t>(hs) * W;
                        const T* w3 = wk + (dh + 1) * 3;
                        axpy(W - 1, w3[0], xrow, yrow + 1);
                        axpy(W, w3[1], xrow, yrow);
                        axpy(W - 1, w3[2], xrow + 1, yrow);
                    }
                }
            }
        }
    }
    return y;
}

template <typename T>
Tensor<T> Conv2d<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !x_.empty());
    const std::size_t B = x_.shape[0], H = x_.shape[2], W = x_.shape[3];
    Tensor<T> dx(x_.shape);
    for (std::size_t b = 0; b < B; ++b) {
        for (std::size_t co = 0; co < out_; ++co) {
            const T* dyplane = dy.ptr() + (b * out_ + co) * H * W;
            double db = 0.0;
            for (std::size_t i = 0; i < H * W; ++i) db += dyplane[i];
            gb_.data[co] += static_cast<T>(db);
            for (std::size_t ci = 0; ci < in_; ++ci) {
                const T* xplane = x_.ptr() + (b * in_ + ci) * H * W;
                T* dxplane = dx.ptr() + (b * in_ + ci) * H * W;
                const T* wk = w_.ptr() + (co * in_ + ci) * 9;
                T* gwk = gw_.ptr() + (co * in_ + ci) * 9;
                for (std::size_t h = 0; h < H; ++h) {
                    const T* dyrow = dyplane + h * W;
                    for (int dh = -1; dh <= 1; ++dh) {
                        const long hs = static_cast<long>(h) + dh;
                        if (hs < 0 || hs >= static_cast<long>(H)) continue;
                        const T* xrow = xplane + static_cast<std::size_t>(hs) * W;
                        T* dxrow = dxplane + static_cast<std::size_t>(hs) * W;
                        const T* w3 = wk + (dh + 1) * 3;
                        T* gw3 = gwk + (dh + 1) * 3;
                        axpy(W - 1, w3[0], dyrow + 1, dxrow);
                        axpy(W, w3[1], dyrow, dxrow);
                        axpy(W - 1, w3[2], dyrow, dxrow + 1);
                        gw3[0] += static_cast<T>(dot(W - 1, dyrow + 1, xrow));
                        gw3[1] += static_cast<T>(dot(W, dyrow, xrow));
                        gw3[2] += static_cast<T>(dot(W - 1, dyrow, xrow + 1));
                    }
                }
            }
        }
    }
    return dx;
}

template <typename T>
void Conv2d<T>::collect_params(std::vector<ParamRef<T>>& out) {
    out.push_back({this->label_ + ".weight", &w_, &gw_, true});
    out.push_back({this->label_ + ".bias", &b_, &gb_, true});
}

// ------------------------------------------------------------- BatchNorm

template <typename T>
BatchNorm<T>::BatchNorm(std::string label, std::size_t channels)
    : Layer<T>(std::move(label)),
      channels_(channels),
      gamma_({channels}),
      beta_({channels}),
      ggamma_({channels}),
      gbeta_({channels}),
      running_mean_({channels}),
      running_var_({channels}) {
    for (T& v : gamma_.data) v = T(1);
    for (T& v : running_var_.data) v = T(1);
}

template <typename T>
Tensor<T> BatchNorm<T>::forward(const Tensor<T>& x, const ForwardContext& ctx) {
    if (x.shape.size() < 3 || x.shape[1] != channels_) {
        shape_error(this->label_, "(B, " + std::to_string(channels_) + ", spatial...)",
                    x.shape);
    }
    batch_ = x.shape[0];
    spatial_ = 1;
    for (std::size_t d = 2; d < x.shape.size(); ++d) spatial_ *= x.shape[d];
    const std::size_t B = batch_, S = spatial_, C = channels_;
    const double n = static_cast<double>(B * S);

    used_batch_stats_ = ctx.training;
    invstd_.assign(C, 0.0);
    std::vector<double> mean(C, 0.0);
    if (ctx.training) {
        std::vector<double> var(C, 0.0);
        for (std::size_t c = 0; c < C; ++c) {
            double sum = 0.0;
            for (std::size_t b = 0; b < B; ++b) {
                const T* row = x.ptr() + (b * C + c) * S;
                for (std::size_t s = 0; s < S; ++s) sum += row[s];
            }
            mean[c] = sum / n;
            double sq = 0.0;
            for (std::size_t b = 0; b < B; ++b) {
                const T* row = x.ptr() + (b * C + c) * S;
                for (std::size_t s = 0; s < S; ++s) {
                    const double d = row[s] - mean[c];
                    sq += d * d;
                }
            }
            var[c] = sq / n;  // biased, used for normalization
            invstd_[c] = 1.0 / std::sqrt(var[c] + kEps);
        }
        if (ctx.update_running_stats) {
            const double unbias = n > 1.0 ? n / (n - 1.0) : 1.0;
            for (std::size_t c = 0; c < C; ++c) {
                running_mean_.data[c] = static_cast<T>(
                    (1.0 - kMomentum) * running_mean_.data[c] + kMomentum * mean[c]);
                running_var_.data[c] = static_cast<T>(
                    (1.0 - kMomentum) * running_var_.data[c] +
                    kMomentum * var[c] * unbias);
            }
        }
    } else {
        for (std::size_t c = 0; c < C; ++c) {
            mean[c] = running_mean_.data[c];
            invstd_[c] = 1.0 / std::sqrt(static_cast<double>(running_var_.data[c]) + kEps);
        }
    }

    xhat_ = Tensor<T>(x.shape);
    Tensor<T> y(x.shape);
    for (std::size_t b = 0; b < B; ++b) {
        for (std::size_t c = 0; c < C; ++c) {
            const T* xrow = x.ptr() + (b * C + c) * S;
            T* hrow = xhat_.ptr() + (b * C + c) * S;
            T* yrow = y.ptr() + (b * C + c) * S;
            const T m = static_cast<T>(mean[c]);
            const T is = static_cast<T>(invstd_[c]);
            const T g = gamma_.data[c];
            const T bt = beta_.data[c];
            for (std::size_t s = 0; s < S; ++s) {
                hrow[s] = (xrow[s] - m) * is;
                yrow[s] = g * hrow[s] + bt;
            }
        }
    }
    return y;
}

template <typename T>
Tensor<T> BatchNorm<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !xhat_.empty());
    const std::size_t B = batch_, S = spatial_, C = channels_;
    const double n = static_cast<double>(B * S);
    Tensor<T> dx(xhat_.shape);
    for (std::size_t c = 0; c < C; ++c) {
        double sum_dy = 0.0, sum_dy_xhat = 0.0;
        for (std::size_t b = 0; b < B; ++b) {
            const T* dyrow = dy.ptr() + (b * C + c) * S;
            const T* hrow = xhat_.ptr() + (b * C + c) * S;
            for (std::size_t s = 0; s < S; ++s) {
                sum_dy += dyrow[s];
                sum_dy_xhat += static_cast<double>(dyrow[s]) * hrow[s];
            }
        }
        gbeta_.data[c] += static_cast<T>(sum_dy);
        ggamma_.data[c] += static_cast<T>(sum_dy_xhat);
        const double g = gamma_.data[c];
        const double is = invstd_[c];
        if (used_batch_stats_) {
            // dx = gamma*invstd/n * (n*dy - sum(dy) - xhat*sum(dy*xhat))
            const double k = g * is / n;
            for (std::size_t b = 0; b < B; ++b) {
                const T* dyrow = dy.ptr() + (b * C + c) * S;
                const T* hrow = xhat_.ptr() + (b * C + c) * S;
                T* dxrow = dx.ptr() + (b * C + c) * S;
                for (std::size_t s = 0; s < S; ++s) {
                    dxrow[s] = static_cast<T>(
                        k * (n * dyrow[s] - sum_dy - hrow[s] * sum_dy_xhat));
                }
            }
        } else {
            const double k = g * is;
            for (std::size_t b = 0; b < B; ++b) {
                const T* dyrow = dy.ptr() + (b * C + c) * S;
                T* dxrow = dx.ptr() + (b * C + c) * S;
                for (std::size_t s = 0; s < S; ++s) {
                    dxrow[s] = static_cast<T>(k * dyrow[s]);
                }
            }
        }
    }
    return dx;
}

template <typename T>
void BatchNorm<T>::collect_params(std::vector<ParamRef<T>>& out) {
    out.push_back({this->label_ + ".gamma", &gamma_, &ggamma_, true});
    out.push_back({this->label_ + ".beta", &beta_, &gbeta_, true});
    out.push_back({this->label_ + ".running_mean", &running_mean_, nullptr, false});
    out.push_back({this->label_ + ".running_var", &running_var_, nullptr, false});
}

// ------------------------------------------------------------------ ReLU

template <typename T>
Tensor<T> ReLU<T>::forward(const Tensor<T>& x, const ForwardContext&) {
    x_ = x;
    Tensor<T> y(x.shape);
    for (std::size_t i = 0; i < x.size(); ++i) y.data[i] = x.data[i] > T(0) ? x.data[i] : T(0);
    return y;
}

template <typename T>
Tensor<T> ReLU<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !x_.empty());
    Tensor<T> dx(x_.shape);
    for (std::size_t i = 0; i < x_.size(); ++i) {
        dx.data[i] = x_.data[i] > T(0) ? dy.data[i] : T(0);
    }
    return dx;
}

// --------------------------------------------------------------- Flatten

template <typename T>
Tensor<T> Flatten<T>::forward(const Tensor<T>& x, const ForwardContext&) {
    if (x.shape.size() < 2) shape_error(this->label_, "(B, ...)", x.shape);
    in_shape_ = x.shape;
    Tensor<T> y;
    y.shape = {x.shape[0], x.size() / x.shape[0]};
    y.data = x.data;
    return y;
}

template <typename T>
Tensor<T> Flatten<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !in_shape_.empty());
    Tensor<T> dx;
    dx.shape = in_shape_;
    dx.data = dy.data;
    return dx;
}

// ---------------------------------------------------------------- Linear

template <typename T>
Linear<T>::Linear(std::string label, std::size_t in_features, std::size_t out_features,
                  Rng& init_rng)
    : Layer<T>(std::move(label)),
      in_(in_features),
      out_(out_features),
      w_({out_features, in_features}),
      b_({out_features}),
      gw_({out_features, in_features}),
      gb_({out_features}) {
    fill_uniform(w_, init_rng, 1.0 / std::sqrt(static_cast<double>(in_)));
}

template <typename T>
Tensor<T> Linear<T>::forward(const Tensor<T>& x, const ForwardContext&) {
    if (x.shape.size() != 2 || x.shape[1] != in_) {
        shape_error(this->label_, "(B, " + std::to_string(in_) + ")", x.shape);
    }
    x_ = x;
    const std::size_t B = x.shape[0];
    Tensor<T> y({B, out_});
    for (std::size_t b = 0; b < B; ++b) {
        const T* xrow = x.ptr() + b * in_;
        for (std::size_t o = 0; o < out_; ++o) {
            y.data[b * out_ + o] =
                static_cast<T>(static_cast<double>(b_.data[o]) +
                               dot(in_, w_.ptr() + o * in_, xrow));
        }
    }
    return y;
}

template <typename T>
Tensor<T> Linear<T>::backward(const Tensor<T>& dy) {
    require_cached(this->label_, !x_.empty());
    const std::size_t B = x_.shape[0];
    Tensor<T> dx(x_.shape);
    for (std::size_t b = 0; b < B; ++b) {
        const T* dyrow = dy.ptr() + b * out_;
        const T* xrow = x_.ptr() + b * in_;
        T* dxrow = dx.ptr() + b * in_;
        for (std::size_t o = 0; o < out_; ++o) {
            const T d = dyrow[o];
            gb_.data[o] += d;
            axpy(in_, d, w_.ptr() + o * in_, dxrow);
            axpy(in_, d, xrow, gw_.ptr() + o * in_);
        }
    }
    return dx;
}

template <typename T>
void Linear<T>::collect_params(std::vector<ParamRef<T>>& out) {
    out.push_back({this->label_ + ".weight", &w_, &gw_, true});
    out.push_back({this->label_ + ".bias", &b_, &gb_, true});
}

template class Conv1d<float>;
template class Conv1d<double>;
template class Conv2d<float>;
template class Conv2d<double>;
template class BatchNorm<float>;
template class BatchNorm<double>;
template class ReLU<float>;
template class ReLU<double>;
template class Flatten<float>;
template class Flatten<double>;
template class Linear<float>;
template class Linear<double>;

}  // namespace dictnn
