#include "dictnn/metrics.hpp"

#include <cstdio>
#include <stdexcept>

#include <json.hpp>

#include "dictnn/corpus.hpp"

namespace dictnn {

MetricsReport compute_metrics(const std::vector<int>& predictions,
                              const std::vector<int>& targets) {
    if (targets.empty()) throw std::runtime_error("metrics: empty input");
    if (predictions.size() != targets.size()) {
        throw std::runtime_error("metrics: " + std::to_string(predictions.size()) +
                                 " predictions for " + std::to_string(targets.size()) +
                                 " targets");
    }

    MetricsReport r;
    r.total = targets.size();
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const int t = targets[i], p = predictions[i];
        if (t < 0 || t > 2 || p < 0 || p > 2) {
            throw std::runtime_error("metrics: label out of range at index " +
                                     std::to_string(i));
        }
        r.confusion[static_cast<std::size_t>(t)][static_cast<std::size_t>(p)]++;
    }

    std::size_t correct = 0;
    for (std::size_t c = 0; c < 3; ++c) correct += r.confusion[c][c];
    r.accuracy = static_cast<double>(correct) / static_cast<double>(r.total);
    r.micro_f1 = r.accuracy;

    for (std::size_t c = 0; c < 3; ++c) {
        std::size_t tp = r.confusion[c][c];
        std::size_t predicted = 0, actual = 0;
        for (std::size_t k = 0; k < 3; ++k) {
            predicted += r.confusion[k][c];
            actual += r.confusion[c][k];
        }
        ClassMetrics& m = r.per_class[c];
        m.support = actual;
        m.precision = predicted ? static_cast<double>(tp) / static_cast<double>(predicted)
                                : 0.0;
        m.recall = actual ? static_cast<double>(tp) / static_cast<double>(actual) : 0.0;
        m.f1 = (m.precision + m.recall) > 0.0
                   ? 2.0 * m.precision * m.recall / (m.precision + m.recall)
                   : 0.0;
        r.macro_precision += m.precision / 3.0;
        r.macro_recall += m.recall / 3.0;
        r.macro_f1 += m.f1 / 3.0;
    }
    return r;
}

namespace {

void append_row(std::string& out, const std::string& name, double p, double rc, double f,
                const std::string& support) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-12s %9.4f %9.4f %9.4f %9s\n", name.c_str(), p,
                  rc, f, support.c_str());
    out += buf;
}

}  // namespace

std::string metrics_table(const MetricsReport& r) {
    std::string out;
    char buf[128];
    std::snprintf(buf, sizeof(buf), "%-12s %9s %9s %9s %9s\n", "", "precision",
                  "recall", "f1-score", "support");
    out += buf;
    for (std::size_t c = 0; c < 3; ++c) {
        const ClassMetrics& m = r.per_class[c];
        append_row(out, label_name(static_cast<Label>(c)), m.precision, m.recall, m.f1,
                   std::to_string(m.support));
    }
    std::snprintf(buf, sizeof(buf), "%-12s %9s %9s %9.4f %9zu\n", "accuracy", "", "",
                  r.accuracy, r.total);
    out += buf;
    append_row(out, "macro avg", r.macro_precision, r.macro_recall, r.macro_f1,
               std::to_string(r.total));
    append_row(out, "micro avg", r.accuracy, r.accuracy, r.micro_f1,
               std::to_string(r.total));
    return out;
}

std::string metrics_json(const MetricsReport& r) {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["epoch"] = r.epoch;
    j["total"] = r.total;
    j["accuracy"] = r.accuracy;
    j["per_class"] = nlohmann::ordered_json::object();
    for (std::size_t c = 0; c < 3; ++c) {
        const ClassMetrics& m = r.per_class[c];
        nlohmann::ordered_json& e = j["per_class"][label_name(static_cast<Label>(c))];
        e["precision"] = m.precision;
        e["recall"] = m.recall;
        e["f1"] = m.f1;
        e["support"] = m.support;
    }
    j["macro"] = {{"precision", r.macro_precision},
                  {"recall", r.macro_recall},
                  {"f1", r.macro_f1}};
    j["micro"] = {{"precision", r.accuracy}, {"recall", r.accuracy}, {"f1", r.micro_f1}};
    j["confusion"] = r.confusion;
    return j.dump(2);
}

void write_confusion_csv(std::ostream& out, const MetricsReport& r, bool normalized) {
    out << "true\\predicted";
    for (std::size_t c = 0; c < 3; ++c) out << ',' << label_name(static_cast<Label>(c));
    out << '\n';
    for (std::size_t t = 0; t < 3; ++t) {
        out << label_name(static_cast<Label>(t));
        std::size_t row_total = 0;
        for (std::size_t p = 0; p < 3; ++p) row_total += r.confusion[t][p];
        for (std::size_t p = 0; p < 3; ++p) {
            if (normalized) {
                const double pct =
                    row_total ? 100.0 * static_cast<double>(r.confusion[t][p]) /
                                    static_cast<double>(row_total)
                              : 0.0;
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.2f", pct);
                out << ',' << buf;
            } else {
                out << ',' << r.confusion[t][p];
            }
        }
        out << '\n';
    }
}

}  // namespace dictnn
