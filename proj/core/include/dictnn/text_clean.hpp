#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dictnn {

// Noise removal applied to every tweet before vectorisation. In order:
// lowercase, URL tokens, @mentions, the reserved words `rt`/`fav`, emoji and
// ASCII smileys, `#` markers (hashtag content survives), standalone digit
// tokens, all symbols outside `? ! . ,`, whitespace collapse. The pass is
// repeated until the text is stable, so the result is always a fixed point.
//
// Output contains only lowercase ASCII letters, digits, `? ! . ,` and single
// interior spaces.
std::string clean_tweet(std::string_view raw);

// Splits cleaned text on spaces, stripping `? ! . ,` from token edges.
// Interior punctuation (`b!tch`) is preserved; emptied tokens are dropped.
std::vector<std::string> simple_tokenize(std::string_view clean_text);

namespace emoji {

// Codepoint ranges and smiley strings removed by clean_tweet. The same
// table ships as data/emoji_smileys.txt for reference.
const std::vector<std::pair<char32_t, char32_t>>& ranges();
const std::vector<std::string>& ascii_smileys();
bool is_emoji(char32_t cp);

}  // namespace emoji

}  // namespace dictnn
