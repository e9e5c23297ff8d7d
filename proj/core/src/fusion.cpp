#include "dictnn/fusion.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <stdexcept>

#include "dictnn/text_clean.hpp"
#include "dictnn/token_scalars.hpp"

static_assert(std::endian::native == std::endian::little,
              "matrix records are little-endian; add byte swapping for this host");

namespace dictnn {

std::vector<double> dict_vector(const std::vector<std::string>& tokens,
                                const HateDictionary& dict, double cutoff) {
    std::vector<double> scores;
    scores.reserve(tokens.size());
    for (const std::string& t : tokens) scores.push_back(dict.token_score(t, cutoff));
    return scores;
}

std::vector<double> stretch_linear(const std::vector<double>& v, std::size_t n) {
    const std::size_t m = v.size();
    if (n == 0) return {};
    if (m == 0) return std::vector<double>(n, 0.0);
    if (m == 1) return std::vector<double>(n, v[0]);
    if (n == 1) return {v[0]};
    std::vector<double> out(n);
    // i*(m-1) stays integral, so pos is exact whenever the ideal position is an
    // integer; this anchors both endpoints and makes m == n the identity.
    for (std::size_t i = 0; i < n; ++i) {
        const double pos =
            static_cast<double>(i * (m - 1)) / static_cast<double>(n - 1);
        std::size_t lo = static_cast<std::size_t>(pos);
        if (lo >= m - 1) {
            out[i] = v[m - 1];
            continue;
        }
        const double frac = pos - static_cast<double>(lo);
        out[i] = v[lo] + (v[lo + 1] - v[lo]) * frac;
    }
    return out;
}

std::vector<double> pad_or_truncate(std::vector<double> v, std::size_t length) {
    v.resize(length, 0.0);
    return v;
}

TweetMatrix assemble_1d(const std::vector<double>& scalars) {
    TweetMatrix m;
    m.rows = 1;
    const std::size_t n = std::min(scalars.size(), kMatrixCols);
    for (std::size_t i = 0; i < n; ++i) m.at(0, i) = static_cast<float>(scalars[i]);
    return m;
}

TweetMatrix assemble_2d(const std::vector<double>& scalars,
                        const std::vector<double>& dict_scores) {
    TweetMatrix m;
    m.rows = 2;
    const std::size_t n = std::min(scalars.size(), kMatrixCols);
    for (std::size_t i = 0; i < n; ++i) m.at(0, i) = static_cast<float>(scalars[i]);
    std::vector<double> stretched = stretch_linear(dict_scores, n);
    for (std::size_t i = 0; i < n; ++i) m.at(1, i) = static_cast<float>(stretched[i]);
    return m;
}

TweetMatrix vectorize_1d(std::string_view clean_text, const Vocab& vocab) {
    return assemble_1d(encode_scalars(clean_text, vocab));
}

TweetMatrix fuse_2d(std::string_view clean_text, const Vocab& vocab,
                    const HateDictionary& dict) {
    std::vector<double> scalars = encode_scalars(clean_text, vocab);
    std::vector<double> scores = dict_vector(simple_tokenize(clean_text), dict);
    return assemble_2d(scalars, scores);
}

void write_matrix_record(std::ostream& out, const TweetMatrix& m) {
    out.put(static_cast<char>(m.rows));
    out.write(reinterpret_cast<const char*>(m.values.data()),
              static_cast<std::streamsize>(m.rows * kMatrixCols * sizeof(float)));
}

TweetMatrix read_matrix_record(std::istream& in) {
    int rows = in.get();
    if (rows == std::istream::traits_type::eof()) {
        throw std::runtime_error("matrix record: unexpected end of stream");
    }
    if (rows != 1 && rows != 2) {
        throw std::runtime_error("matrix record: bad row count " + std::to_string(rows));
    }
    TweetMatrix m;
    m.rows = static_cast<std::uint8_t>(rows);
    in.read(reinterpret_cast<char*>(m.values.data()),
            static_cast<std::streamsize>(m.rows * kMatrixCols * sizeof(float)));
    if (in.gcount() !=
        static_cast<std::streamsize>(m.rows * kMatrixCols * sizeof(float))) {
        throw std::runtime_error("matrix record: truncated payload");
    }
    return m;
}

}  // namespace dictnn
