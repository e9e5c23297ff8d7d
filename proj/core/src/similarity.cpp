#include "dictnn/similarity.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace dictnn {

MatchBlock longest_match(std::string_view a, std::size_t alo, std::size_t ahi,
                         std::string_view b, std::size_t blo, std::size_t bhi) {
    // Positions of each byte value in b[blo,bhi).
    std::array<std::vector<std::size_t>, 256> b_positions;
    for (std::size_t j = blo; j < bhi; ++j) {
        b_positions[static_cast<unsigned char>(b[j])].push_back(j);
    }

    MatchBlock best{alo, blo, 0};
    // lengths[j - blo]: length of the longest match ending at (i, j).
    std::vector<std::size_t> lengths(bhi - blo, 0);
    std::vector<std::size_t> new_lengths(bhi - blo, 0);

    for (std::size_t i = alo; i < ahi; ++i) {
        std::fill(new_lengths.begin(), new_lengths.end(), 0);
        for (std::size_t j : b_positions[static_cast<unsigned char>(a[i])]) {
            std::size_t k = (j > blo) ? lengths[j - blo - 1] + 1 : 1;
            new_lengths[j - blo] = k;
            // Scanning i ascending and j ascending, a strictly-greater test
            // keeps the earliest maximal block in a, then in b.
            if (k > best.length) {
                best = {i - k + 1, j - k + 1, k};
            }
        }
        lengths.swap(new_lengths);
    }
    return best;
}

namespace {

std::size_t matched_in_range(std::string_view a, std::size_t alo, std::size_t ahi,
                             std::string_view b, std::size_t blo, std::size_t bhi) {
    if (alo >= ahi || blo >= bhi) return 0;
    MatchBlock block = longest_match(a, alo, ahi, b, blo, bhi);
    if (block.length == 0) return 0;
    return block.length
         + matched_in_range(a, alo, block.pos_a, b, blo, block.pos_b)
         + matched_in_range(a, block.pos_a + block.length, ahi,
                            b, block.pos_b + block.length, bhi);
}

}  // namespace

std::size_t matched_chars(std::string_view a, std::string_view b) {
    return matched_in_range(a, 0, a.size(), b, 0, b.size());
}

double similarity(std::string_view a, std::string_view b) {
    const std::size_t total = a.size() + b.size();
    if (total == 0) return 1.0;
    return 2.0 * static_cast<double>(matched_chars(a, b)) / static_cast<double>(total);
}

}  // namespace dictnn
