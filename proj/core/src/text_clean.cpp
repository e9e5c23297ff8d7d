#include "dictnn/text_clean.hpp"

#include <algorithm>
#include <cstdint>

namespace dictnn {

namespace emoji {

const std::vector<std::pair<char32_t, char32_t>>& ranges() {
    static const std::vector<std::pair<char32_t, char32_t>> kRanges = {
        {0x200D, 0x200D},    // zero-width joiner
        {0x20E3, 0x20E3},    // combining enclosing keycap
        {0x2600, 0x26FF},    // miscellaneous symbols
        {0x2700, 0x27BF},    // dingbats
        {0x2B00, 0x2BFF},    // arrows, stars
        {0xFE00, 0xFE0F},    // variation selectors
        {0x1F000, 0x1F02F},  // mahjong, dominoes
        {0x1F0A0, 0x1F0FF},  // playing cards
        {0x1F1E6, 0x1F1FF},  // regional indicators
        {0x1F300, 0x1F5FF},  // symbols and pictographs
        {0x1F600, 0x1F64F},  // emoticons
        {0x1F680, 0x1F6FF},  // transport
        {0x1F700, 0x1F77F},  // alchemical
        {0x1F780, 0x1F7FF},  // geometric shapes extended
        {0x1F800, 0x1F8FF},  // supplemental arrows
        {0x1F900, 0x1F9FF},  // supplemental symbols
        {0x1FA00, 0x1FA6F},  // chess symbols
        {0x1FA70, 0x1FAFF},  // symbols extended
    };
    return kRanges;
}

const std::vector<std::string>& ascii_smileys() {
    // Lowercased forms; lowercasing runs before smiley removal.
    static const std::vector<std::string> kSmileys = {
        ":)", ":(", ":-)", ":-(", ";)", ";-)", ":d", ":p", "(:", "):", "(-:", ")-:",
    };
    return kSmileys;
}

bool is_emoji(char32_t cp) {
    for (const auto& [lo, hi] : ranges()) {
        if (cp >= lo && cp <= hi) return true;
    }
    return false;
}

}  // namespace emoji

namespace {

constexpr char32_t kInvalid = 0xFFFD;

bool is_space_cp(char32_t cp) {
    switch (cp) {
        case U' ': case U'\t': case U'\n': case U'\r': case U'\f': case U'\v':
        case 0x00A0: case 0x2028: case 0x2029: case 0x3000:
            return true;
        default:
            return cp >= 0x2000 && cp <= 0x200B;
    }
}

bool is_ascii_letter(char32_t cp) { return cp >= U'a' && cp <= U'z'; }
bool is_ascii_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_word_char(char32_t cp) {
    return is_ascii_letter(cp) || is_ascii_digit(cp) || cp == U'_';
}
bool is_kept_punct(char32_t cp) {
    return cp == U'?' || cp == U'!' || cp == U'.' || cp == U',';
}

std::vector<char32_t> decode_utf8(std::string_view s) {
    std::vector<char32_t> out;
    out.reserve(s.size());
    std::size_t i = 0;
    while (i < s.size()) {
        unsigned char b0 = static_cast<unsigned char>(s[i]);
        char32_t cp = kInvalid;
        std::size_t len = 1;
        if (b0 < 0x80) {
            cp = b0;
        } else if ((b0 >> 5) == 0x6 && i + 1 < s.size()) {
            cp = (b0 & 0x1F) << 6 | (s[i + 1] & 0x3F);
            len = 2;
        } else if ((b0 >> 4) == 0xE && i + 2 < s.size()) {
            cp = (b0 & 0x0F) << 12 | (s[i + 1] & 0x3F) << 6 | (s[i + 2] & 0x3F);
            len = 3;
        } else if ((b0 >> 3) == 0x1E && i + 3 < s.size()) {
            cp = (char32_t(b0) & 0x07) << 18 | (s[i + 1] & 0x3F) << 12 |
                 (s[i + 2] & 0x3F) << 6 | (s[i + 3] & 0x3F);
            len = 4;
        }
        out.push_back(cp);
        i += len;
    }
    return out;
}

using Token = std::vector<char32_t>;

bool is_url_token(const Token& t) {
    // www.…
    static const char32_t www[] = {U'w', U'w', U'w', U'.'};
    if (t.size() > 4 && std::equal(std::begin(www), std::end(www), t.begin())) return true;
    // scheme://…
    if (t.empty() || !is_ascii_letter(t[0])) return false;
    std::size_t i = 1;
    while (i < t.size() &&
           (is_ascii_letter(t[i]) || is_ascii_digit(t[i]) || t[i] == U'+' ||
            t[i] == U'-' || t[i] == U'.')) {
        ++i;
    }
    return i + 2 < t.size() && t[i] == U':' && t[i + 1] == U'/' && t[i + 2] == U'/';
}

void remove_mentions(Token& t) {
    Token out;
    out.reserve(t.size());
    std::size_t i = 0;
    while (i < t.size()) {
        if (t[i] == U'@' && i + 1 < t.size() && is_word_char(t[i + 1])) {
            i += 2;
            while (i < t.size() && is_word_char(t[i])) ++i;
        } else {
            out.push_back(t[i++]);
        }
    }
    t.swap(out);
}

bool equals_ascii(const Token& t, std::string_view s) {
    if (t.size() != s.size()) return false;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (t[i] != static_cast<char32_t>(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

bool starts_with_ascii(const Token& t, std::size_t at, std::string_view s) {
    if (at + s.size() > t.size()) return false;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (t[at + i] != static_cast<char32_t>(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// Strips listed smileys from token edges, then emoji codepoints anywhere.
void remove_emoji_and_smileys(Token& t) {
    bool stripped = true;
    while (stripped && !t.empty()) {
        stripped = false;
        for (const std::string& s : emoji::ascii_smileys()) {
            if (starts_with_ascii(t, 0, s)) {
                t.erase(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(s.size()));
                stripped = true;
                break;
            }
            if (t.size() >= s.size() && starts_with_ascii(t, t.size() - s.size(), s)) {
                t.resize(t.size() - s.size());
                stripped = true;
                break;
            }
        }
    }
    t.erase(std::remove_if(t.begin(), t.end(), emoji::is_emoji), t.end());
}

bool is_standalone_digits(const Token& t) {
    bool saw_digit = false;
    for (char32_t cp : t) {
        if (is_ascii_digit(cp)) {
            saw_digit = true;
        } else if (is_ascii_letter(cp)) {
            return false;
        }
        // everything else counts as a strippable symbol for this check
    }
    return saw_digit;
}

// One full pass over the rule list. clean_tweet() iterates this to a fixed
// point so rules that expose new material (e.g. `#rt` -> `rt`) still apply.
std::string clean_pass(std::string_view text) {
    std::vector<char32_t> cps = decode_utf8(text);

    // lowercase (ASCII; anything beyond that is removed as a symbol later)
    for (char32_t& cp : cps) {
        if (cp >= U'A' && cp <= U'Z') cp += 32;
    }

    // split into whitespace-delimited tokens
    std::vector<Token> tokens;
    Token current;
    for (char32_t cp : cps) {
        if (is_space_cp(cp)) {
            if (!current.empty()) tokens.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(cp);
        }
    }
    if (!current.empty()) tokens.push_back(std::move(current));

    std::string out;
    out.reserve(text.size());
    for (Token& tok : tokens) {
        if (is_url_token(tok)) continue;
        remove_mentions(tok);
        if (equals_ascii(tok, "rt") || equals_ascii(tok, "fav")) continue;
        remove_emoji_and_smileys(tok);
        tok.erase(std::remove(tok.begin(), tok.end(), static_cast<char32_t>(U'#')), tok.end());
        if (is_standalone_digits(tok)) continue;
        Token kept;
        kept.reserve(tok.size());
        for (char32_t cp : tok) {
            if (is_ascii_letter(cp) || is_ascii_digit(cp) || is_kept_punct(cp)) {
                kept.push_back(cp);
            }
        }
        if (kept.empty()) continue;
        if (!out.empty()) out.push_back(' ');
        for (char32_t cp : kept) out.push_back(static_cast<char>(cp));
    }
    return out;
}

}  // namespace

std::string clean_tweet(std::string_view raw) {
    std::string text = clean_pass(raw);
    // A pass only deletes characters, so this terminates quickly.
    while (true) {
        std::string next = clean_pass(text);
        if (next == text) return text;
        text = std::move(next);
    }
}

std::vector<std::string> simple_tokenize(std::string_view clean_text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    const auto is_edge_punct = [](char c) {
        return c == '?' || c == '!' || c == '.' || c == ',';
    };
    while (i < clean_text.size()) {
        while (i < clean_text.size() && clean_text[i] == ' ') ++i;
        std::size_t start = i;
        while (i < clean_text.size() && clean_text[i] != ' ') ++i;
        if (i == start) continue;
        std::size_t lo = start, hi = i;
        while (lo < hi && is_edge_punct(clean_text[lo])) ++lo;
        while (hi > lo && is_edge_punct(clean_text[hi - 1])) --hi;
        if (hi > lo) tokens.emplace_back(clean_text.substr(lo, hi - lo));
    }
    return tokens;
}

}  // namespace dictnn
