#pragma once

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include "dictnn/hate_dictionary.hpp"
#include "dictnn/vocab.hpp"

namespace dictnn {

inline constexpr std::size_t kMatrixCols = 120;

// Fixed-width model input: row 0 holds the subword-id scalars, row 1 (2D mode
// only) the stretched dictionary scores; both zero-padded on the right.
struct TweetMatrix {
    std::uint8_t rows = 1;  // 1 or 2
    std::array<float, 2 * kMatrixCols> values{};

    float at(std::size_t r, std::size_t c) const { return values[r * kMatrixCols + c]; }
    float& at(std::size_t r, std::size_t c) { return values[r * kMatrixCols + c]; }
};

// Per-token dictionary scores; zeros where nothing matches.
std::vector<double> dict_vector(const std::vector<std::string>& tokens,
                                const HateDictionary& dict,
                                double cutoff = HateDictionary::kDefaultCutoff);

// Linear interpolation resample with endpoint anchoring: out[i] samples v at
// i*(m-1)/(n-1). m==0 -> zeros, m==1 -> constant, n==1 -> [v[0]].
std::vector<double> stretch_linear(const std::vector<double>& v, std::size_t n);

std::vector<double> pad_or_truncate(std::vector<double> v, std::size_t length);

TweetMatrix vectorize_1d(std::string_view clean_text, const Vocab& vocab);
TweetMatrix fuse_2d(std::string_view clean_text, const Vocab& vocab,
                    const HateDictionary& dict);

// Variants that take an already-computed scalar row (provider injection).
TweetMatrix assemble_1d(const std::vector<double>& scalars);
TweetMatrix assemble_2d(const std::vector<double>& scalars,
                        const std::vector<double>& dict_scores);

// Binary record: one byte row count, then rows*120 little-endian f32 values.
void write_matrix_record(std::ostream& out, const TweetMatrix& m);
TweetMatrix read_matrix_record(std::istream& in);  // throws on EOF/bad row count

}  // namespace dictnn
