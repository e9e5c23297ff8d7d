#pragma once

#include <map>
#include <string>

#include "dictnn/hate_dictionary.hpp"
#include "dictnn/metrics.hpp"
#include "dictnn/network.hpp"
#include "dictnn/vectorizer.hpp"

namespace dictnn {

struct EvaluationArtifacts {
    MetricsReport report;
    std::string table;              // classification-report text table
    std::string json;               // metrics JSON (schema_version 1)
    std::string confusion_csv;      // raw counts
    std::string confusion_pct_csv;  // row-normalized percentages
};

// Evaluation-mode forward over the whole set, batched.
EvaluationArtifacts evaluate_set(Network<float>& net, const VectorizedSet& set,
                                 std::size_t batch_size);

// Per-class mean of the per-tweet dictionary score sums (pre-stretch).
// Classes with no records are absent from the map.
std::map<Label, double> avg_hate_score_per_class(
    const std::vector<TweetRecord>& records, const HateDictionary& dict,
    double cutoff = HateDictionary::kDefaultCutoff);

}  // namespace dictnn
