#pragma once

#include <array>
#include <cstddef>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace dictnn {

enum class Label { Hateful = 0, Abusive = 1, Normal = 2 };

const char* label_name(Label label);
Label label_from_string(std::string_view name);  // throws on unknown names

struct TweetRecord {
    std::string id;
    std::string text;
    Label label = Label::Normal;
};

struct Corpus {
    std::vector<TweetRecord> records;
    std::size_t spam_dropped = 0;

    std::array<std::size_t, 3> class_counts() const;
    std::size_t size() const { return records.size(); }
};

// Numeric class -> label mapping for the first source's CSV; the published
// convention is 0=hateful, 1=abusive, 2=normal.
using DavidsonMapping = std::map<int, Label>;
const DavidsonMapping& default_davidson_mapping();

// CSV with a header naming at least `class` and `tweet`. Ids come from an
// `id` column when present, otherwise the zero-based data-row ordinal; either
// way they are namespaced as "davidson:<id>".
Corpus load_davidson(std::istream& in,
                     const DavidsonMapping& mapping = default_davidson_mapping());

// CSV with a header naming at least `text` and `label` (hateful / abusive /
// normal / spam). Spam rows are dropped and counted. Ids namespaced as
// "founta:<id>".
Corpus load_founta(std::istream& in);

Corpus load_merge(std::istream& davidson, std::istream& founta,
                  const DavidsonMapping& mapping = default_davidson_mapping());

// Normalized corpus files: CSV `id,label,text` with quoted text.
void write_normalized(std::ostream& out, const Corpus& corpus);
Corpus load_normalized(std::istream& in);

}  // namespace dictnn
