#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "dictnn/corpus.hpp"

namespace dictnn {

struct SplitFractions {
    double train = 0.70;
    double validation = 0.15;
    double test = 0.15;
};

struct SplitSet {
    std::vector<TweetRecord> train;
    std::vector<TweetRecord> validation;
    std::vector<TweetRecord> test;
};

// Per class: a seeded shuffle, then floor(train_frac*n) to train,
// floor(validation_frac*n) to validation, remainder to test. Absent classes
// are skipped; present classes with fewer than 3 records are an error.
SplitSet stratified_split(const Corpus& corpus, const SplitFractions& fractions,
                          std::uint64_t seed);
SplitSet stratified_split(const Corpus& corpus, std::uint64_t seed);

std::array<std::size_t, 3> count_labels(const std::vector<TweetRecord>& records);

// Inverse-frequency loss weights w_c = N / (3 * n_c), from training counts
// only. Zero counts are an error.
std::array<double, 3> class_weights(const std::array<std::size_t, 3>& train_counts);

}  // namespace dictnn
