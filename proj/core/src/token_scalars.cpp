#include "dictnn/token_scalars.hpp"

#include <charconv>
#include <stdexcept>

#include "dictnn/text_clean.hpp"

namespace dictnn {

namespace {

constexpr std::size_t kMaxWordChars = 100;

void tokenize_word(std::string_view word, const Vocab& vocab,
                   std::vector<std::string>& out) {
    if (word.size() > kMaxWordChars) {
        out.emplace_back(Vocab::kUnk);
        return;
    }
    std::vector<std::string> pieces;
    std::size_t start = 0;
    while (start < word.size()) {
        std::size_t end = word.size();
        std::string match;
        while (end > start) {
            std::string candidate(word.substr(start, end - start));
            if (start > 0) candidate.insert(0, "##");
            if (vocab.contains(candidate)) {
                match = std::move(candidate);
                break;
            }
            --end;
        }
        if (match.empty()) {
            out.emplace_back(Vocab::kUnk);
            return;
        }
        pieces.push_back(std::move(match));
        start = end;
    }
    for (auto& p : pieces) out.push_back(std::move(p));
}

}  // namespace

std::vector<std::string> wordpiece_tokenize(std::string_view clean_text,
                                            const Vocab& vocab) {
    std::vector<std::string> out;
    std::size_t i = 0;
    while (i < clean_text.size()) {
        while (i < clean_text.size() && clean_text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < clean_text.size() && clean_text[i] != ' ') ++i;
        if (i > start) tokenize_word(clean_text.substr(start, i - start), vocab, out);
    }
    return out;
}

std::vector<double> encode_scalars(std::string_view clean_text, const Vocab& vocab,
                                   bool scale_unit_interval) {
    std::vector<std::string> pieces = wordpiece_tokenize(clean_text, vocab);
    std::vector<double> values;
    values.reserve(pieces.size());
    const double denom =
        vocab.size() > 1 ? static_cast<double>(vocab.size() - 1) : 1.0;
    for (const std::string& p : pieces) {
        double id = static_cast<double>(vocab.lookup(p));
        values.push_back(scale_unit_interval ? id / denom : id);
    }
    return values;
}

std::map<std::string, std::vector<double>> load_precomputed(std::istream& in) {
    std::map<std::string, std::vector<double>> table;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t tab = line.find('\t');
        if (tab == std::string::npos) {
            throw std::runtime_error("precomputed scalars: line " +
                                     std::to_string(line_no) + ": missing tab");
        }
        std::string id = line.substr(0, tab);
        if (table.count(id)) {
            throw std::runtime_error("precomputed scalars: line " +
                                     std::to_string(line_no) +
                                     ": duplicate tweet id '" + id + "'");
        }
        std::vector<double> values;
        std::size_t pos = tab + 1;
        while (pos < line.size()) {
            std::size_t comma = line.find(',', pos);
            if (comma == std::string::npos) comma = line.size();
            const char* first = line.data() + pos;
            const char* last = line.data() + comma;
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(first, last, v);
            if (ec != std::errc() || ptr != last) {
                throw std::runtime_error(
                    "precomputed scalars: line " + std::to_string(line_no) +
                    ": non-numeric scalar '" + std::string(first, last) + "'");
            }
            values.push_back(v);
            pos = comma + 1;
        }
        table.emplace(std::move(id), std::move(values));
    }
    return table;
}

std::vector<double> VocabScalarProvider::scalars(const std::string&,
                                                 std::string_view clean_text) const {
    return encode_scalars(clean_text, *vocab_, scale_);
}

std::vector<double> PrecomputedScalarProvider::scalars(
    const std::string& tweet_id, std::string_view) const {
    auto it = table_.find(tweet_id);
    if (it == table_.end()) {
        throw std::out_of_range("precomputed scalars: unknown tweet id '" +
                                tweet_id + "'");
    }
    return it->second;
}

}  // namespace dictnn
