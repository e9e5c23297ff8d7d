#include "dictnn/hate_dictionary.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "dictnn/csv.hpp"
#include "dictnn/similarity.hpp"

namespace dictnn {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool has_whitespace(std::string_view s) {
    return std::any_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isspace(c); });
}

[[noreturn]] void load_error(std::size_t line, const std::string& what) {
    throw std::runtime_error("dictionary csv line " + std::to_string(line) + ": " + what);
}

}  // namespace

HateDictionary::HateDictionary(const HateDictionary& other)
    : entries_(other.entries_), dropped_multiword_(other.dropped_multiword_) {}

HateDictionary& HateDictionary::operator=(const HateDictionary& other) {
    if (this != &other) {
        entries_ = other.entries_;
        dropped_multiword_ = other.dropped_multiword_;
        std::lock_guard<std::mutex> lock(cache_mutex_);
        score_cache_.clear();
    }
    return *this;
}

HateDictionary::HateDictionary(HateDictionary&& other) noexcept
    : entries_(std::move(other.entries_)),
      dropped_multiword_(other.dropped_multiword_),
      score_cache_(std::move(other.score_cache_)) {}

HateDictionary& HateDictionary::operator=(HateDictionary&& other) noexcept {
    if (this != &other) {
        entries_ = std::move(other.entries_);
        dropped_multiword_ = other.dropped_multiword_;
        score_cache_ = std::move(other.score_cache_);
    }
    return *this;
}

HateDictionary HateDictionary::load(std::istream& csv) {
    CsvReader reader(csv);
    std::vector<std::string> fields;

    if (!reader.next(fields)) {
        throw std::runtime_error("dictionary csv: empty stream, expected header");
    }
    if (fields.size() != 3 || fields[0] != "term" || fields[1] != "offensiveness" ||
        fields[2] != "unambiguous") {
        load_error(reader.line(), "expected header `term,offensiveness,unambiguous`");
    }

    HateDictionary dict;
    std::unordered_map<std::string, std::size_t> index_of;

    while (reader.next(fields)) {
        const std::size_t line = reader.line();
        if (fields.size() == 1 && fields[0].empty()) continue;  // blank line
        if (fields.size() != 3) load_error(line, "expected 3 columns, got " + std::to_string(fields.size()));

        std::string term = to_lower(fields[0]);
        if (term.empty()) load_error(line, "empty term");

        int score = 0;
        try {
            std::size_t pos = 0;
            score = std::stoi(fields[1], &pos);
            if (pos != fields[1].size()) throw std::invalid_argument("trailing chars");
        } catch (const std::exception&) {
            load_error(line, "offensiveness is not an integer: `" + fields[1] + "`");
        }
        if (score < 0 || score > 100) {
            load_error(line, "offensiveness out of [0,100]: " + std::to_string(score));
        }

        bool unambiguous = false;
        if (fields[2] == "true") unambiguous = true;
        else if (fields[2] == "false") unambiguous = false;
        else load_error(line, "unambiguous must be `true` or `false`, got `" + fields[2] + "`");

        if (has_whitespace(term)) {
            ++dict.dropped_multiword_;
            continue;
        }

        auto it = index_of.find(term);
        if (it != index_of.end()) {
            dict.entries_[it->second] = HateTerm{term, score, unambiguous};
        } else {
            index_of.emplace(term, dict.entries_.size());
            dict.entries_.push_back(HateTerm{std::move(term), score, unambiguous});
        }
    }
    return dict;
}

double HateDictionary::score_uncached(std::string_view token, double cutoff) const {
    double sum = 0.0;
    std::size_t matches = 0;
    for (const HateTerm& entry : entries_) {
        if (similarity(token, entry.term) >= cutoff) {
            double effective = static_cast<double>(entry.offensiveness);
            if (entry.unambiguous) effective *= kUnambiguousFactor;
            sum += effective;
            ++matches;
        }
    }
    return matches == 0 ? 0.0 : sum / static_cast<double>(matches);
}

double HateDictionary::token_score(std::string_view token, double cutoff) const {
    if (cutoff != kDefaultCutoff) return score_uncached(token, cutoff);

    std::string key(token);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        auto it = score_cache_.find(key);
        if (it != score_cache_.end()) return it->second;
    }
    double score = score_uncached(token, cutoff);
    {
        std::lock_guard<std::mutex> lock(cache_mutex_);
        score_cache_.emplace(std::move(key), score);
    }
    return score;
}

}  // namespace dictnn
