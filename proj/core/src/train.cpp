#include "dictnn/train.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "dictnn/checkpoint.hpp"
#include "dictnn/loss.hpp"
#include "dictnn/network.hpp"
#include "dictnn/split.hpp"

namespace dictnn {

namespace {

std::vector<std::size_t> all_indices(std::size_t n) {
    std::vector<std::size_t> idx(n);
    for (std::size_t i = 0; i < n; ++i) idx[i] = i;
    return idx;
}

std::vector<int> argmax_rows(const Tensor<float>& logits) {
    std::vector<int> out(logits.shape[0]);
    for (std::size_t b = 0; b < logits.shape[0]; ++b) {
        const float* row = logits.ptr() + b * 3;
        int best = 0;
        for (int c = 1; c < 3; ++c) {
            if (row[c] > row[best]) best = c;
        }
        out[b] = best;
    }
    return out;
}

std::array<std::size_t, 3> label_counts(const std::vector<int>& labels) {
    std::array<std::size_t, 3> counts{};
    for (int l : labels) counts[static_cast<std::size_t>(l)]++;
    return counts;
}

}  // namespace

std::vector<int> predict(Network<float>& net, const VectorizedSet& set, bool two_d,
                         std::size_t batch_size) {
    std::vector<int> predictions;
    predictions.reserve(set.size());
    const ForwardContext eval_ctx{/*training=*/false, /*update_running_stats=*/false};
    const std::vector<std::size_t> idx = all_indices(set.size());
    for (std::size_t start = 0; start < set.size(); start += batch_size) {
        const std::size_t end = std::min(set.size(), start + batch_size);
        std::vector<std::size_t> slice(idx.begin() + static_cast<std::ptrdiff_t>(start),
                                       idx.begin() + static_cast<std::ptrdiff_t>(end));
        Tensor<float> logits = net.forward(batch_tensor(set, slice, two_d), eval_ctx);
        for (int p : argmax_rows(logits)) predictions.push_back(p);
    }
    return predictions;
}

double evaluation_loss(Network<float>& net, const VectorizedSet& set, bool two_d,
                       std::size_t batch_size, const std::array<double, 3>& weights) {
    const ForwardContext eval_ctx{/*training=*/false, /*update_running_stats=*/false};
    const std::vector<std::size_t> idx = all_indices(set.size());
    double total = 0.0;
    std::size_t batches = 0;
    for (std::size_t start = 0; start < set.size(); start += batch_size) {
        const std::size_t end = std::min(set.size(), start + batch_size);
        std::vector<std::size_t> slice(idx.begin() + static_cast<std::ptrdiff_t>(start),
                                       idx.begin() + static_cast<std::ptrdiff_t>(end));
        Tensor<float> logits = net.forward(batch_tensor(set, slice, two_d), eval_ctx);
        total += cross_entropy_weighted(logits, batch_targets(set, slice), weights).value;
        ++batches;
    }
    return batches ? total / static_cast<double>(batches) : 0.0;
}

TrainResult train_model(const RunConfig& cfg, const VectorizedSet& train_set,
                        const VectorizedSet& val_set,
                        const std::string& checkpoint_dir) {
    TrainResult result;
    if (cfg.epochs == 0) {
        result.status = "no training";
        return result;
    }
    if (train_set.size() == 0 || val_set.size() == 0) {
        throw std::runtime_error("train: empty training or validation set");
    }

    const bool two_d = cfg.model == "2d";
    Network<float> net = build_model<float>(cfg.model, cfg.seed);
    Optimizer<float> optimizer(cfg.optimizer, cfg.lr);
    PlateauScheduler scheduler;

    const std::array<double, 3> loss_weights =
        cfg.balancing == BalancingMode::ClassWeights
            ? class_weights(label_counts(train_set.labels))
            : std::array<double, 3>{1.0, 1.0, 1.0};

    std::vector<Label> labels;
    labels.reserve(train_set.size());
    for (int l : train_set.labels) labels.push_back(static_cast<Label>(l));
    const Batcher batcher(std::move(labels), static_cast<std::size_t>(cfg.batch_size),
                          cfg.batch_mode(), Rng::derive(cfg.seed, 0x9a7c));

    const ForwardContext train_ctx{/*training=*/true, /*update_running_stats=*/true};
    double lr = cfg.lr;

    for (int epoch = 0; epoch < cfg.epochs; ++epoch) {
        double epoch_loss = 0.0;
        std::size_t batch_count = 0;
        std::vector<int> train_preds, train_targets;
        train_preds.reserve(train_set.size());
        train_targets.reserve(train_set.size());

        const auto batches = batcher.epoch_batches(static_cast<std::size_t>(epoch));
        for (const auto& batch : batches) {
            Tensor<float> input = batch_tensor(train_set, batch, two_d);
            std::vector<int> targets = batch_targets(train_set, batch);

            net.zero_grad();
            Tensor<float> logits = net.forward(input, train_ctx);
            LossResult<float> loss = cross_entropy_weighted(logits, targets, loss_weights);
            if (!std::isfinite(loss.value)) {
                char buf[128];
                std::snprintf(buf, sizeof(buf),
                              "diverged: non-finite loss at epoch %d batch %zu (lr %g)",
                              epoch, batch_count, lr);
                result.status = buf;
                return result;
            }
            net.backward(loss.dlogits);
            optimizer.step(net.params());

            epoch_loss += loss.value;
            ++batch_count;
            for (int p : argmax_rows(logits)) train_preds.push_back(p);
            train_targets.insert(train_targets.end(), targets.begin(), targets.end());
        }

        const MetricsReport train_report = compute_metrics(train_preds, train_targets);
        std::vector<int> val_preds =
            predict(net, val_set, two_d, static_cast<std::size_t>(cfg.batch_size));
        MetricsReport val_report = compute_metrics(val_preds, val_set.labels);
        val_report.epoch = epoch;
        const double val_loss =
            evaluation_loss(net, val_set, two_d, static_cast<std::size_t>(cfg.batch_size),
                            loss_weights);

        EpochStats stats;
        stats.epoch = epoch;
        stats.train_loss = batch_count ? epoch_loss / static_cast<double>(batch_count) : 0.0;
        stats.train_accuracy = train_report.accuracy;
        stats.train_macro_f1 = train_report.macro_f1;
        stats.val_loss = val_loss;
        stats.val_accuracy = val_report.accuracy;
        stats.val_macro_f1 = val_report.macro_f1;
        stats.lr = lr;
        result.history.push_back(stats);

        if (result.best_epoch < 0 || val_report.macro_f1 > result.best_val_macro_f1) {
            result.best_epoch = epoch;
            result.best_val_macro_f1 = val_report.macro_f1;
            result.best_val_report = val_report;
            if (!checkpoint_dir.empty()) {
                CheckpointManifest manifest;
                manifest.architecture = cfg.model;
                manifest.seed = cfg.seed;
                manifest.epoch = epoch;
                manifest.metrics = {{"validation_macro_f1", val_report.macro_f1},
                                    {"validation_accuracy", val_report.accuracy},
                                    {"validation_loss", val_loss}};
                save_checkpoint(checkpoint_dir, net, manifest);
            }
        }

        if (cfg.scheduler) {
            lr = scheduler.step(val_report.macro_f1, lr);
            optimizer.set_lr(lr);
        }
    }
    return result;
}

void write_history_csv(std::ostream& out, const std::vector<EpochStats>& history) {
    out << "epoch,train_loss,train_accuracy,train_macro_f1,"
           "val_loss,val_accuracy,val_macro_f1,lr\n";
    char buf[256];
    for (const EpochStats& s : history) {
        std::snprintf(buf, sizeof(buf), "%d,%.6f,%.6f,%.6f,%.6f,%.6f,%.6f,%g\n",
                      s.epoch, s.train_loss, s.train_accuracy, s.train_macro_f1,
                      s.val_loss, s.val_accuracy, s.val_macro_f1, s.lr);
        out << buf;
    }
}

}  // namespace dictnn
