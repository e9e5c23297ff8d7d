#pragma once

#include <cstddef>
#include <istream>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace dictnn {

// One lexicon entry. `offensiveness` is the 0-100 rating; `unambiguous`
// marks terms that are hateful in essentially all usages, whose score is
// doubled when matched.
struct HateTerm {
    std::string term;
    int offensiveness = 0;
    bool unambiguous = false;
};

// Searchable hate-term lexicon. Immutable after load; scoring is pure and
// safe to call concurrently (the memo cache is mutex-guarded).
class HateDictionary {
public:
    static constexpr double kDefaultCutoff = 0.85;
    static constexpr double kUnambiguousFactor = 2.0;

    HateDictionary() = default;
    HateDictionary(const HateDictionary& other);
    HateDictionary& operator=(const HateDictionary& other);
    HateDictionary(HateDictionary&&) noexcept;
    HateDictionary& operator=(HateDictionary&&) noexcept;

    // CSV with header `term,offensiveness,unambiguous`. Single-word rows are
    // lowercased and deduplicated (last occurrence wins); multi-word rows are
    // dropped and counted. Malformed rows throw with the 1-based line number.
    static HateDictionary load(std::istream& csv);

    const std::vector<HateTerm>& entries() const { return entries_; }
    std::size_t dropped_multiword_count() const { return dropped_multiword_; }

    // Mean effective score of all entries whose similarity to `token`
    // reaches the cutoff (doubled for unambiguous entries), 0.0 when nothing
    // matches. Range [0, 200]. Results for the default cutoff are memoized.
    double token_score(std::string_view token, double cutoff = kDefaultCutoff) const;

private:
    double score_uncached(std::string_view token, double cutoff) const;

    std::vector<HateTerm> entries_;
    std::size_t dropped_multiword_ = 0;

    // Keyed by token; only consulted for the default cutoff.
    mutable std::mutex cache_mutex_;
    mutable std::unordered_map<std::string, double> score_cache_;
};

}  // namespace dictnn
