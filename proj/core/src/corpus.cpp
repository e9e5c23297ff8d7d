#include "dictnn/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <unordered_set>

#include "dictnn/csv.hpp"

namespace dictnn {

const char* label_name(Label label) {
    switch (label) {
        case Label::Hateful: return "hateful";
        case Label::Abusive: return "abusive";
        case Label::Normal: return "normal";
    }
    return "?";
}

Label label_from_string(std::string_view name) {
    if (name == "hateful") return Label::Hateful;
    if (name == "abusive") return Label::Abusive;
    if (name == "normal") return Label::Normal;
    throw std::runtime_error("unknown label '" + std::string(name) +
                             "' (expected hateful, abusive or normal)");
}

std::array<std::size_t, 3> Corpus::class_counts() const {
    std::array<std::size_t, 3> counts{};
    for (const TweetRecord& r : records) {
        counts[static_cast<std::size_t>(r.label)]++;
    }
    return counts;
}

const DavidsonMapping& default_davidson_mapping() {
    static const DavidsonMapping kDefault = {
        {0, Label::Hateful}, {1, Label::Abusive}, {2, Label::Normal}};
    return kDefault;
}

namespace {

// Returns the index of `name` in `header`, or -1.
long find_column(const std::vector<std::string>& header, std::string_view name) {
    for (std::size_t i = 0; i < header.size(); ++i) {
        if (header[i] == name) return static_cast<long>(i);
    }
    return -1;
}

long require_column(const std::vector<std::string>& header, std::string_view name,
                    const char* source) {
    long idx = find_column(header, name);
    if (idx < 0) {
        throw std::runtime_error(std::string(source) + ": missing required column '" +
                                 std::string(name) + "'");
    }
    return idx;
}

void check_unique(std::unordered_set<std::string>& seen, const std::string& id,
                  const char* source, std::size_t line) {
    if (!seen.insert(id).second) {
        throw std::runtime_error(std::string(source) + ": line " +
                                 std::to_string(line) + ": duplicate id '" + id + "'");
    }
}

}  // namespace

Corpus load_davidson(std::istream& in, const DavidsonMapping& mapping) {
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row)) throw std::runtime_error("davidson: empty input");
    const long class_col = require_column(row, "class", "davidson");
    const long tweet_col = require_column(row, "tweet", "davidson");
    const long id_col = find_column(row, "id");

    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::size_t ordinal = 0;
    while (reader.next(row)) {
        const std::size_t line = reader.line();
        const std::size_t needed =
            static_cast<std::size_t>(std::max(class_col, tweet_col)) + 1;
        if (row.size() < needed) {
            throw std::runtime_error("davidson: line " + std::to_string(line) +
                                     ": expected at least " + std::to_string(needed) +
                                     " fields, got " + std::to_string(row.size()));
        }
        const std::string& cls = row[static_cast<std::size_t>(class_col)];
        int value = 0;
        auto [ptr, ec] = std::from_chars(cls.data(), cls.data() + cls.size(), value);
        auto it = ec == std::errc() && ptr == cls.data() + cls.size()
                      ? mapping.find(value)
                      : mapping.end();
        if (it == mapping.end()) {
            throw std::runtime_error("davidson: line " + std::to_string(line) +
                                     ": unknown class value '" + cls + "'");
        }
        TweetRecord rec;
        rec.id = "davidson:" + (id_col >= 0 && static_cast<std::size_t>(id_col) < row.size()
                                    ? row[static_cast<std::size_t>(id_col)]
                                    : std::to_string(ordinal));
        rec.text = row[static_cast<std::size_t>(tweet_col)];
        rec.label = it->second;
        check_unique(seen, rec.id, "davidson", line);
        corpus.records.push_back(std::move(rec));
        ++ordinal;
    }
    return corpus;
}

Corpus load_founta(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row)) throw std::runtime_error("founta: empty input");
    const long text_col = require_column(row, "text", "founta");
    const long label_col = require_column(row, "label", "founta");
    const long id_col = find_column(row, "id");

    Corpus corpus;
    std::unordered_set<std::string> seen;
    std::size_t ordinal = 0;
    while (reader.next(row)) {
        const std::size_t line = reader.line();
        const std::size_t needed =
            static_cast<std::size_t>(std::max(text_col, label_col)) + 1;
        if (row.size() < needed) {
            throw std::runtime_error("founta: line " + std::to_string(line) +
                                     ": expected at least " + std::to_string(needed) +
                                     " fields, got " + std::to_string(row.size()));
        }
        const std::string& label = row[static_cast<std::size_t>(label_col)];
        const std::string id =
            "founta:" + (id_col >= 0 && static_cast<std::size_t>(id_col) < row.size()
                             ? row[static_cast<std::size_t>(id_col)]
                             : std::to_string(ordinal));
        ++ordinal;
        if (label == "spam") {
            corpus.spam_dropped++;
            continue;
        }
        TweetRecord rec;
        rec.id = id;
        rec.text = row[static_cast<std::size_t>(text_col)];
        try {
            rec.label = label_from_string(label);
        } catch (const std::runtime_error&) {
            throw std::runtime_error("founta: line " + std::to_string(line) +
                                     ": unknown label '" + label + "'");
        }
        check_unique(seen, rec.id, "founta", line);
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

Corpus load_merge(std::istream& davidson, std::istream& founta,
                  const DavidsonMapping& mapping) {
    Corpus a = load_davidson(davidson, mapping);
    Corpus b = load_founta(founta);
    Corpus merged;
    merged.records = std::move(a.records);
    merged.records.insert(merged.records.end(),
                          std::make_move_iterator(b.records.begin()),
                          std::make_move_iterator(b.records.end()));
    merged.spam_dropped = a.spam_dropped + b.spam_dropped;
    return merged;
}

void write_normalized(std::ostream& out, const Corpus& corpus) {
    write_csv_row(out, {"id", "label", "text"});
    for (const TweetRecord& r : corpus.records) {
        write_csv_row(out, {r.id, label_name(r.label), r.text});
    }
}

Corpus load_normalized(std::istream& in) {
    CsvReader reader(in);
    std::vector<std::string> row;
    if (!reader.next(row)) throw std::runtime_error("corpus: empty input");
    const long id_col = require_column(row, "id", "corpus");
    const long label_col = require_column(row, "label", "corpus");
    const long text_col = require_column(row, "text", "corpus");

    Corpus corpus;
    std::unordered_set<std::string> seen;
    while (reader.next(row)) {
        const std::size_t line = reader.line();
        if (row.size() < 3) {
            throw std::runtime_error("corpus: line " + std::to_string(line) +
                                     ": expected 3 fields, got " +
                                     std::to_string(row.size()));
        }
        TweetRecord rec;
        rec.id = row[static_cast<std::size_t>(id_col)];
        rec.text = row[static_cast<std::size_t>(text_col)];
        try {
            rec.label = label_from_string(row[static_cast<std::size_t>(label_col)]);
        } catch (const std::runtime_error& e) {
            throw std::runtime_error("corpus: line " + std::to_string(line) + ": " +
                                     e.what());
        }
        check_unique(seen, rec.id, "corpus", line);
        corpus.records.push_back(std::move(rec));
    }
    return corpus;
}

}  // namespace dictnn
