#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "dictnn/metrics.hpp"
#include "dictnn/network.hpp"
#include "dictnn/run_config.hpp"
#include "dictnn/vectorizer.hpp"

namespace dictnn {

struct EpochStats {
    int epoch = 0;
    double train_loss = 0.0;
    double train_accuracy = 0.0;
    double train_macro_f1 = 0.0;
    double val_loss = 0.0;
    double val_accuracy = 0.0;
    double val_macro_f1 = 0.0;
    double lr = 0.0;
};

struct TrainResult {
    std::vector<EpochStats> history;
    long best_epoch = -1;
    double best_val_macro_f1 = 0.0;
    MetricsReport best_val_report;
    // "ok", "no training" (epochs == 0), or "diverged: ..." with epoch,
    // batch and learning rate.
    std::string status = "ok";

    bool ok() const { return status == "ok"; }
};

// One full run: per epoch, a pass over shuffled/sampled training batches,
// then evaluation-mode validation metrics. A checkpoint is written to
// `checkpoint_dir` (unless empty) every time validation macro F1 improves.
// Loss weights follow cfg.balancing: inverse-frequency weights from the
// training counts for class_weights, unit weights for the sampler.
TrainResult train_model(const RunConfig& cfg, const VectorizedSet& train_set,
                        const VectorizedSet& val_set,
                        const std::string& checkpoint_dir);

void write_history_csv(std::ostream& out, const std::vector<EpochStats>& history);

// Evaluation-mode predictions over a whole set, batched.
std::vector<int> predict(Network<float>& net, const VectorizedSet& set, bool two_d,
                         std::size_t batch_size);

// Average weighted cross-entropy over a set in evaluation mode.
double evaluation_loss(Network<float>& net, const VectorizedSet& set, bool two_d,
                       std::size_t batch_size, const std::array<double, 3>& weights);

}  // namespace dictnn
