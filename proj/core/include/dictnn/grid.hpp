#pragma once

#include <string>
#include <vector>

#include "dictnn/run_config.hpp"
#include "dictnn/train.hpp"

namespace dictnn {

struct GridPoint {
    OptimizerRule optimizer;
    double lr;
    BalancingMode balancing;
    bool scheduler;
};

// Full cross product {adam, rmsprop, sgd} x {1e-4, 1e-3, 1e-2} x
// {sampler, class_weights} x {scheduler on, off}: 36 points.
std::vector<GridPoint> enumerate_grid();

struct GridRunResult {
    GridPoint point;
    bool failed = false;
    double best_val_macro_f1 = 0.0;
    long best_epoch = -1;
    std::string status;
};

struct GridOutcome {
    std::vector<GridRunResult> results;
    long argmax = -1;  // index of the best successful run, -1 if all failed
};

// Runs every grid point as a 1D-model training of cfg.grid_epochs epochs.
// A run that aborts (non-finite loss) is recorded as failed, never fatal.
GridOutcome grid_search(const RunConfig& base, const VectorizedSet& train_set,
                        const VectorizedSet& val_set);

// Same sweep over an explicit point list (small grids in tests).
GridOutcome grid_search_points(const RunConfig& base,
                               const std::vector<GridPoint>& points,
                               const VectorizedSet& train_set,
                               const VectorizedSet& val_set);

// Expected best score when k configurations are sampled uniformly with
// replacement from `scores`: for ascending order statistics s_(1..n),
// EVP(k) = sum_i s_(i) * ((i/n)^k - ((i-1)/n)^k). Returned for k = 1..n.
std::vector<double> expected_validation_performance(std::vector<double> scores);

std::string grid_results_csv(const GridOutcome& outcome);

}  // namespace dictnn
