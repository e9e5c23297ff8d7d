#pragma once

#include <istream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "dictnn/vocab.hpp"

namespace dictnn {

// Greedy longest-match-first subword split. Per whitespace word: take the
// longest vocab prefix, then continue with "##"-prefixed pieces; if any
// position has no match, or the word exceeds 100 characters, the whole word
// becomes [UNK].
std::vector<std::string> wordpiece_tokenize(std::string_view clean_text,
                                            const Vocab& vocab);

// Token ids of wordpiece_tokenize as doubles. No [CLS]/[SEP] framing; [UNK]
// ids are included. With scale_unit_interval, ids are divided by
// (vocab size - 1) so values land in [0, 1].
std::vector<double> encode_scalars(std::string_view clean_text, const Vocab& vocab,
                                   bool scale_unit_interval = false);

// Parses lines of the form `tweet_id<TAB>v1,v2,…,vk`. Empty payload after the
// tab means an empty sequence. Duplicate ids and non-numeric scalars are
// errors naming the offending line.
std::map<std::string, std::vector<double>> load_precomputed(std::istream& in);

// Source of the per-tweet scalar row: either on-the-fly subword encoding or a
// precomputed sequence store keyed by tweet id.
class ScalarProvider {
  public:
    virtual ~ScalarProvider() = default;
    virtual std::vector<double> scalars(const std::string& tweet_id,
                                        std::string_view clean_text) const = 0;
};

class VocabScalarProvider final : public ScalarProvider {
  public:
    explicit VocabScalarProvider(const Vocab& vocab, bool scale_unit_interval = false)
        : vocab_(&vocab), scale_(scale_unit_interval) {}
    std::vector<double> scalars(const std::string& tweet_id,
                                std::string_view clean_text) const override;

  private:
    const Vocab* vocab_;
    bool scale_;
};

class PrecomputedScalarProvider final : public ScalarProvider {
  public:
    explicit PrecomputedScalarProvider(std::map<std::string, std::vector<double>> table)
        : table_(std::move(table)) {}
    // Unknown tweet_id → std::out_of_range naming the id.
    std::vector<double> scalars(const std::string& tweet_id,
                                std::string_view clean_text) const override;

  private:
    std::map<std::string, std::vector<double>> table_;
};

}  // namespace dictnn
