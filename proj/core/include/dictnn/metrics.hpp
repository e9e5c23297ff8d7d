#pragma once

#include <array>
#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

namespace dictnn {

struct ClassMetrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t support = 0;
};

struct MetricsReport {
    std::array<std::array<std::size_t, 3>, 3> confusion{};  // [true][predicted]
    std::array<ClassMetrics, 3> per_class{};
    double accuracy = 0.0;
    double macro_precision = 0.0;
    double macro_recall = 0.0;
    double macro_f1 = 0.0;
    // Micro-averaged P = R = F1 = accuracy for single-label classification.
    double micro_f1 = 0.0;
    std::size_t total = 0;
    long epoch = -1;
};

// Zero-division guards: a class with no predicted and no actual positives
// contributes precision = recall = F1 = 0. Empty input is an error.
MetricsReport compute_metrics(const std::vector<int>& predictions,
                              const std::vector<int>& targets);

// Aligned classification-report table: per-class P/R/F1/support plus
// accuracy, macro avg and micro avg rows.
std::string metrics_table(const MetricsReport& report);

// Deterministic machine-readable form (fixed key order, schema_version 1).
std::string metrics_json(const MetricsReport& report);

// 3x3 counts, or row-normalized percentages with `normalized`.
void write_confusion_csv(std::ostream& out, const MetricsReport& report,
                         bool normalized);

}  // namespace dictnn
