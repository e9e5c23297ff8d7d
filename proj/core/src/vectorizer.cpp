#include "dictnn/vectorizer.hpp"

#include <stdexcept>

#include "dictnn/text_clean.hpp"

namespace dictnn {

TweetVectorizer::TweetVectorizer(const Vocab* vocab, const HateDictionary* dict,
                                 bool two_d, bool scale_unit_interval, double cutoff,
                                 std::shared_ptr<const ScalarProvider> provider)
    : vocab_(vocab),
      dict_(dict),
      two_d_(two_d),
      scale_(scale_unit_interval),
      cutoff_(cutoff),
      provider_(std::move(provider)) {
    if (!vocab_ && !provider_) {
        throw std::runtime_error("vectorizer: needs a vocab or a scalar provider");
    }
    if (two_d_ && !dict_) {
        throw std::runtime_error("vectorizer: 2d mode needs a dictionary");
    }
}

TweetMatrix TweetVectorizer::matrix(const TweetRecord& record) const {
    const std::string clean = clean_tweet(record.text);
    const std::vector<double> scalars =
        provider_ ? provider_->scalars(record.id, clean)
                  : encode_scalars(clean, *vocab_, scale_);
    if (!two_d_) return assemble_1d(scalars);
    return assemble_2d(scalars, dict_vector(simple_tokenize(clean), *dict_, cutoff_));
}

double TweetVectorizer::hate_score_sum(const TweetRecord& record) const {
    if (!dict_) throw std::runtime_error("vectorizer: no dictionary loaded");
    const std::string clean = clean_tweet(record.text);
    double sum = 0.0;
    for (double s : dict_vector(simple_tokenize(clean), *dict_, cutoff_)) sum += s;
    return sum;
}

VectorizedSet vectorize_records(const std::vector<TweetRecord>& records,
                                const TweetVectorizer& vectorizer) {
    VectorizedSet set;
    set.matrices.reserve(records.size());
    set.labels.reserve(records.size());
    for (const TweetRecord& r : records) {
        set.matrices.push_back(vectorizer.matrix(r));
        set.labels.push_back(static_cast<int>(r.label));
    }
    return set;
}

Tensor<float> batch_tensor(const VectorizedSet& set,
                           const std::vector<std::size_t>& indices, bool two_d) {
    const std::size_t B = indices.size();
    Tensor<float> t(two_d ? std::vector<std::size_t>{B, 1, 2, kMatrixCols}
                          : std::vector<std::size_t>{B, 1, kMatrixCols});
    const std::size_t per = two_d ? 2 * kMatrixCols : kMatrixCols;
    for (std::size_t b = 0; b < B; ++b) {
        const TweetMatrix& m = set.matrices[indices[b]];
        const std::size_t rows_expected = two_d ? 2u : 1u;
        if (m.rows != rows_expected) {
            throw std::runtime_error("batch: matrix with " + std::to_string(m.rows) +
                                     " rows fed to a " + (two_d ? std::string("2d") : "1d") +
                                     " batch");
        }
        for (std::size_t i = 0; i < per; ++i) t.data[b * per + i] = m.values[i];
    }
    return t;
}

std::vector<int> batch_targets(const VectorizedSet& set,
                               const std::vector<std::size_t>& indices) {
    std::vector<int> out;
    out.reserve(indices.size());
    for (std::size_t i : indices) out.push_back(set.labels[i]);
    return out;
}

}  // namespace dictnn
