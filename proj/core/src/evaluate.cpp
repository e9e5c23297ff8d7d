#include "dictnn/evaluate.hpp"

#include <sstream>

#include "dictnn/text_clean.hpp"
#include "dictnn/train.hpp"

namespace dictnn {

EvaluationArtifacts evaluate_set(Network<float>& net, const VectorizedSet& set,
                                 std::size_t batch_size) {
    const bool two_d = net.architecture() == "2d";
    std::vector<int> predictions = predict(net, set, two_d, batch_size);

    EvaluationArtifacts artifacts;
    artifacts.report = compute_metrics(predictions, set.labels);
    artifacts.table = metrics_table(artifacts.report);
    artifacts.json = metrics_json(artifacts.report);

    std::ostringstream raw, pct;
    write_confusion_csv(raw, artifacts.report, /*normalized=*/false);
    write_confusion_csv(pct, artifacts.report, /*normalized=*/true);
    artifacts.confusion_csv = raw.str();
    artifacts.confusion_pct_csv = pct.str();
    return artifacts;
}

std::map<Label, double> avg_hate_score_per_class(
    const std::vector<TweetRecord>& records, const HateDictionary& dict,
    double cutoff) {
    std::map<Label, double> sums;
    std::map<Label, std::size_t> counts;
    for (const TweetRecord& r : records) {
        double tweet_sum = 0.0;
        for (const std::string& token : simple_tokenize(clean_tweet(r.text))) {
            tweet_sum += dict.token_score(token, cutoff);
        }
        sums[r.label] += tweet_sum;
        counts[r.label]++;
    }
    std::map<Label, double> means;
    for (const auto& [label, sum] : sums) {
        means[label] = sum / static_cast<double>(counts[label]);
    }
    return means;
}

}  // namespace dictnn
