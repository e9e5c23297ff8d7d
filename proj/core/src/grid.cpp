#include "dictnn/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace dictnn {

std::vector<GridPoint> enumerate_grid() {
    std::vector<GridPoint> grid;
    for (OptimizerRule opt :
         {OptimizerRule::Adam, OptimizerRule::RmsProp, OptimizerRule::Sgd}) {
        for (double lr : {1e-4, 1e-3, 1e-2}) {
            for (BalancingMode bal :
                 {BalancingMode::Sampler, BalancingMode::ClassWeights}) {
                for (bool sched : {true, false}) {
                    grid.push_back({opt, lr, bal, sched});
                }
            }
        }
    }
    return grid;
}

GridOutcome grid_search_points(const RunConfig& base,
                               const std::vector<GridPoint>& points,
                               const VectorizedSet& train_set,
                               const VectorizedSet& val_set) {
    GridOutcome outcome;
    double best = -1.0;
    for (const GridPoint& point : points) {
        RunConfig cfg = base;
        cfg.model = "1d";
        cfg.epochs = base.grid_epochs;
        cfg.optimizer = point.optimizer;
        cfg.lr = point.lr;
        cfg.balancing = point.balancing;
        cfg.scheduler = point.scheduler;

        GridRunResult run;
        run.point = point;
        TrainResult tr = train_model(cfg, train_set, val_set, /*checkpoint_dir=*/"");
        run.status = tr.status;
        if (!tr.ok()) {
            run.failed = true;
        } else {
            run.best_val_macro_f1 = tr.best_val_macro_f1;
            run.best_epoch = tr.best_epoch;
            if (tr.best_val_macro_f1 > best) {
                best = tr.best_val_macro_f1;
                outcome.argmax = static_cast<long>(outcome.results.size());
            }
        }
        outcome.results.push_back(std::move(run));
    }
    return outcome;
}

GridOutcome grid_search(const RunConfig& base, const VectorizedSet& train_set,
                        const VectorizedSet& val_set) {
    return grid_search_points(base, enumerate_grid(), train_set, val_set);
}

std::vector<double> expected_validation_performance(std::vector<double> scores) {
    if (scores.empty()) {
        throw std::runtime_error("expected validation performance: no scores");
    }
    std::sort(scores.begin(), scores.end());
    const std::size_t n = scores.size();
    std::vector<double> curve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        double e = 0.0;
        for (std::size_t i = 1; i <= n; ++i) {
            const double hi = static_cast<double>(i) / static_cast<double>(n);
            const double lo = static_cast<double>(i - 1) / static_cast<double>(n);
            e += scores[i - 1] * (std::pow(hi, static_cast<double>(k)) -
                                  std::pow(lo, static_cast<double>(k)));
        }
        curve[k - 1] = e;
    }
    return curve;
}

std::string grid_results_csv(const GridOutcome& outcome) {
    std::string out = "optimizer,lr,balancing,scheduler,status,best_epoch,best_val_macro_f1\n";
    char buf[256];
    for (std::size_t i = 0; i < outcome.results.size(); ++i) {
        const GridRunResult& r = outcome.results[i];
        std::snprintf(buf, sizeof(buf), "%s,%g,%s,%s,%s,%ld,%.6f\n",
                      to_string(r.point.optimizer), r.point.lr,
                      to_string(r.point.balancing), r.point.scheduler ? "on" : "off",
                      r.failed ? "failed" : "ok", r.best_epoch, r.best_val_macro_f1);
        out += buf;
    }
    if (outcome.argmax >= 0) {
        const GridRunResult& b = outcome.results[static_cast<std::size_t>(outcome.argmax)];
        std::snprintf(buf, sizeof(buf), "# best: %s lr=%g %s scheduler=%s f1=%.6f\n",
                      to_string(b.point.optimizer), b.point.lr,
                      to_string(b.point.balancing), b.point.scheduler ? "on" : "off",
                      b.best_val_macro_f1);
        out += buf;
    }
    return out;
}

}  // namespace dictnn
