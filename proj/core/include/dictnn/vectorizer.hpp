#pragma once

#include <memory>
#include <vector>

#include "dictnn/corpus.hpp"
#include "dictnn/fusion.hpp"
#include "dictnn/hate_dictionary.hpp"
#include "dictnn/tensor.hpp"
#include "dictnn/token_scalars.hpp"
#include "dictnn/vocab.hpp"

namespace dictnn {

// Cleans a tweet, obtains its scalar row (from the vocab tokenizer or an
// injected provider) and assembles the fixed-size model input.
class TweetVectorizer {
  public:
    TweetVectorizer(const Vocab* vocab, const HateDictionary* dict, bool two_d,
                    bool scale_unit_interval = false,
                    double cutoff = HateDictionary::kDefaultCutoff,
                    std::shared_ptr<const ScalarProvider> provider = nullptr);

    TweetMatrix matrix(const TweetRecord& record) const;

    // Sum of the per-token dictionary scores (before stretching).
    double hate_score_sum(const TweetRecord& record) const;

    bool two_d() const { return two_d_; }

  private:
    const Vocab* vocab_;
    const HateDictionary* dict_;
    bool two_d_;
    bool scale_;
    double cutoff_;
    std::shared_ptr<const ScalarProvider> provider_;
};

// A split vectorized once up front so epochs reuse the matrices.
struct VectorizedSet {
    std::vector<TweetMatrix> matrices;
    std::vector<int> labels;

    std::size_t size() const { return matrices.size(); }
};

VectorizedSet vectorize_records(const std::vector<TweetRecord>& records,
                                const TweetVectorizer& vectorizer);

// Stacks the selected matrices into (B,1,120) or (B,1,2,120).
Tensor<float> batch_tensor(const VectorizedSet& set,
                           const std::vector<std::size_t>& indices, bool two_d);

std::vector<int> batch_targets(const VectorizedSet& set,
                               const std::vector<std::size_t>& indices);

}  // namespace dictnn
