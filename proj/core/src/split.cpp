#include "dictnn/split.hpp"

#include <cmath>
#include <stdexcept>

#include "dictnn/rng.hpp"

namespace dictnn {

SplitSet stratified_split(const Corpus& corpus, const SplitFractions& fractions,
                          std::uint64_t seed) {
    const double sum = fractions.train + fractions.validation + fractions.test;
    if (std::abs(sum - 1.0) > 1e-9) {
        throw std::runtime_error("split: fractions must sum to 1, got " +
                                 std::to_string(sum));
    }

    SplitSet out;
    for (int c = 0; c < 3; ++c) {
        std::vector<std::size_t> idx;
        for (std::size_t i = 0; i < corpus.records.size(); ++i) {
            if (static_cast<int>(corpus.records[i].label) == c) idx.push_back(i);
        }
        if (idx.empty()) continue;  // absent classes are fine; tiny ones are not
        if (idx.size() < 3) {
            throw std::runtime_error(std::string("split: class '") +
                                     label_name(static_cast<Label>(c)) + "' has " +
                                     std::to_string(idx.size()) +
                                     " records; at least 3 required");
        }
        // Independent stream per class: assignments within one class do not
        // depend on the other classes' sizes.
        Rng rng(Rng::derive(seed, static_cast<std::uint64_t>(c)));
        rng.shuffle(idx);

        const std::size_t n = idx.size();
        const std::size_t n_train =
            static_cast<std::size_t>(std::floor(fractions.train * static_cast<double>(n)));
        const std::size_t n_val = static_cast<std::size_t>(
            std::floor(fractions.validation * static_cast<double>(n)));
        for (std::size_t i = 0; i < n; ++i) {
            const TweetRecord& rec = corpus.records[idx[i]];
            if (i < n_train) {
                out.train.push_back(rec);
            } else if (i < n_train + n_val) {
                out.validation.push_back(rec);
            } else {
                out.test.push_back(rec);
            }
        }
    }
    return out;
}

SplitSet stratified_split(const Corpus& corpus, std::uint64_t seed) {
    return stratified_split(corpus, SplitFractions{}, seed);
}

std::array<std::size_t, 3> count_labels(const std::vector<TweetRecord>& records) {
    std::array<std::size_t, 3> counts{};
    for (const TweetRecord& r : records) counts[static_cast<std::size_t>(r.label)]++;
    return counts;
}

std::array<double, 3> class_weights(const std::array<std::size_t, 3>& train_counts) {
    std::size_t total = 0;
    for (std::size_t c : train_counts) total += c;
    std::array<double, 3> weights{};
    for (std::size_t c = 0; c < 3; ++c) {
        if (train_counts[c] == 0) {
            throw std::runtime_error(std::string("class_weights: class '") +
                                     label_name(static_cast<Label>(c)) +
                                     "' has zero training records");
        }
        weights[c] = static_cast<double>(total) /
                     (3.0 * static_cast<double>(train_counts[c]));
    }
    return weights;
}

}  // namespace dictnn
