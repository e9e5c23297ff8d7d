#pragma once

#include <cstddef>
#include <string_view>

namespace dictnn {

struct MatchBlock {
    std::size_t pos_a = 0;
    std::size_t pos_b = 0;
    std::size_t length = 0;
};

// Longest common contiguous block of a[alo,ahi) and b[blo,bhi).
// Ties are broken toward the smallest start in a, then the smallest start
// in b, which makes the recursive decomposition deterministic.
MatchBlock longest_match(std::string_view a, std::size_t alo, std::size_t ahi,
                         std::string_view b, std::size_t blo, std::size_t bhi);

// Total characters matched by the recursive block decomposition.
std::size_t matched_chars(std::string_view a, std::string_view b);

// Ratcliff/Obershelp ratio: 2*M / (len(a) + len(b)), in [0, 1].
// Two empty strings compare as 1.0.
double similarity(std::string_view a, std::string_view b);

}  // namespace dictnn
