#include <doctest.h>

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "dictnn/token_scalars.hpp"
#include "dictnn/vocab.hpp"

using dictnn::Vocab;

namespace {

Vocab make_vocab(const std::string& lines) {
    std::istringstream in(lines);
    return Vocab::load(in);
}

const std::string kBase = "[PAD]\n[UNK]\n[CLS]\n[SEP]\n";

}  // namespace

TEST_CASE("vocab: ids are zero-based line numbers") {
    auto v = make_vocab(kBase + "idiot\n##s\n");
    CHECK(v.size() == 6);
    CHECK(v.lookup("idiot") == 4);
    CHECK(v.lookup("##s") == 5);
    CHECK(v.lookup("[PAD]") == 0);
    CHECK(v.lookup("missing") == -1);
    CHECK(v.token(4) == "idiot");
    CHECK(v.pad_id() == 0);
    CHECK(v.unk_id() == 1);
    CHECK(v.cls_id() == 2);
    CHECK(v.sep_id() == 3);
}

TEST_CASE("vocab: duplicate tokens report both line numbers") {
    CHECK_THROWS_WITH_AS(make_vocab(kBase + "idiot\nidiot\n"),
                         doctest::Contains("line"), std::runtime_error);
    try {
        make_vocab(kBase + "idiot\nidiot\n");
    } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("5") != std::string::npos);
        CHECK(msg.find("6") != std::string::npos);
    }
}

TEST_CASE("vocab: missing special token is an error naming it") {
    CHECK_THROWS_WITH_AS(make_vocab("[PAD]\n[CLS]\n[SEP]\nword\n"),
                         doctest::Contains("[UNK]"), std::runtime_error);
}

TEST_CASE("vocab: windows line endings tolerated") {
    auto v = make_vocab("[PAD]\r\n[UNK]\r\n[CLS]\r\n[SEP]\r\nword\r\n");
    CHECK(v.lookup("word") == 4);
}

TEST_CASE("wordpiece: greedy longest match with continuations") {
    auto v = make_vocab(kBase + "idiot\n##s\nare\nsad\n");
    CHECK(dictnn::wordpiece_tokenize("idiots are sad", v) ==
          std::vector<std::string>{"idiot", "##s", "are", "sad"});
}

TEST_CASE("wordpiece: longest prefix wins over shorter") {
    auto v = make_vocab(kBase + "play\nplaying\n##ing\n");
    CHECK(dictnn::wordpiece_tokenize("playing", v) ==
          std::vector<std::string>{"playing"});
}

TEST_CASE("wordpiece: unmatched position collapses whole word to [UNK]") {
    auto v = make_vocab(kBase + "idiot\n");
    // "idiotz": "idiot" matches, then "z" has no "##z" -> whole word [UNK].
    CHECK(dictnn::wordpiece_tokenize("idiotz", v) ==
          std::vector<std::string>{"[UNK]"});
    CHECK(dictnn::wordpiece_tokenize("zzz", v) == std::vector<std::string>{"[UNK]"});
}

TEST_CASE("wordpiece: words over 100 characters become [UNK]") {
    auto v = make_vocab(kBase + "a\n##a\n");
    const std::string long_word(101, 'a');
    CHECK(dictnn::wordpiece_tokenize(long_word, v) ==
          std::vector<std::string>{"[UNK]"});
    const std::string max_word(100, 'a');
    auto pieces = dictnn::wordpiece_tokenize(max_word, v);
    CHECK(pieces.size() == 100);
    CHECK(pieces.front() == "a");
    CHECK(pieces.back() == "##a");
}

TEST_CASE("wordpiece: empty text and stray spaces") {
    auto v = make_vocab(kBase + "hi\n");
    CHECK(dictnn::wordpiece_tokenize("", v).empty());
    CHECK(dictnn::wordpiece_tokenize("  hi   hi ", v) ==
          std::vector<std::string>{"hi", "hi"});
}

TEST_CASE("wordpiece: pieces reassemble the word when no [UNK] appears") {
    auto v = make_vocab(kBase + "un\n##believ\n##able\nbeliev\n");
    auto pieces = dictnn::wordpiece_tokenize("unbelievable", v);
    REQUIRE(pieces == std::vector<std::string>{"un", "##believ", "##able"});
    std::string rebuilt;
    for (const auto& p : pieces) {
        rebuilt += p.substr(p.rfind('#') == std::string::npos ? 0 : p.rfind('#') + 1);
    }
    CHECK(rebuilt == "unbelievable");
}

TEST_CASE("encode_scalars: ids as reals, no [CLS]/[SEP] framing") {
    auto v = make_vocab(kBase + "idiot\n##s\nare\nsad\n");
    CHECK(dictnn::encode_scalars("idiots are sad", v) ==
          std::vector<double>{4.0, 5.0, 6.0, 7.0});
    CHECK(dictnn::encode_scalars("", v).empty());
    CHECK(dictnn::encode_scalars("zzz", v) ==
          std::vector<double>{static_cast<double>(v.unk_id())});
}

TEST_CASE("encode_scalars: values lie in [0, vocab_size)") {
    auto v = make_vocab(kBase + "idiot\n##s\nare\nsad\n");
    for (double x : dictnn::encode_scalars("sad zzz idiots", v)) {
        CHECK(x >= 0.0);
        CHECK(x < static_cast<double>(v.size()));
        CHECK(x == static_cast<double>(static_cast<long>(x)));  // integral
    }
}

TEST_CASE("encode_scalars: unit-interval scaling divides by vocab_size-1") {
    auto v = make_vocab(kBase + "idiot\n##s\nare\nsad\n");  // size 8
    auto scaled = dictnn::encode_scalars("idiots are sad", v, true);
    REQUIRE(scaled.size() == 4);
    CHECK(scaled[0] == doctest::Approx(4.0 / 7.0));
    CHECK(scaled[3] == doctest::Approx(1.0));
}

TEST_CASE("precomputed: parses sequences keyed by tweet id") {
    std::istringstream in("42\t1.5,2.0\n7\t\nneg\t-3.25,0.5,4\n");
    auto table = dictnn::load_precomputed(in);
    REQUIRE(table.size() == 3);
    CHECK(table.at("42") == std::vector<double>{1.5, 2.0});
    CHECK(table.at("7").empty());
    CHECK(table.at("neg") == std::vector<double>{-3.25, 0.5, 4.0});
}

TEST_CASE("precomputed: duplicate ids and junk values are errors") {
    std::istringstream dup("a\t1\na\t2\n");
    CHECK_THROWS_WITH_AS(dictnn::load_precomputed(dup), doctest::Contains("line 2"),
                         std::runtime_error);
    std::istringstream junk("a\t1,x\n");
    CHECK_THROWS_WITH_AS(dictnn::load_precomputed(junk), doctest::Contains("line 1"),
                         std::runtime_error);
    std::istringstream notab("a 1,2\n");
    CHECK_THROWS_AS(dictnn::load_precomputed(notab), std::runtime_error);
}

TEST_CASE("providers: vocab-backed and precomputed deliver the same contract") {
    auto v = make_vocab(kBase + "idiot\n##s\nare\nsad\n");
    dictnn::VocabScalarProvider live(v);
    const auto from_live = live.scalars("any-id", "idiots are sad");

    std::map<std::string, std::vector<double>> table{{"t1", from_live}};
    dictnn::PrecomputedScalarProvider stored(table);
    CHECK(stored.scalars("t1", "ignored") == from_live);

    CHECK_THROWS_AS(stored.scalars("unknown", ""), std::out_of_range);
}
