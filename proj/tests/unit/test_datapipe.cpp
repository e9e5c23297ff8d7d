#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dictnn/batching.hpp"
#include "dictnn/corpus.hpp"
#include "dictnn/rng.hpp"
#include "dictnn/split.hpp"
#include "doctest.h"

using dictnn::Label;

namespace {

dictnn::Corpus synthetic_counts(std::size_t hateful, std::size_t abusive,
                                std::size_t normal) {
    dictnn::Corpus corpus;
    std::size_t n = 0;
    auto add = [&](Label label, std::size_t count) {
        for (std::size_t i = 0; i < count; ++i) {
            corpus.records.push_back({"t:" + std::to_string(n++), "text", label});
        }
    };
    add(Label::Hateful, hateful);
    add(Label::Abusive, abusive);
    add(Label::Normal, normal);
    return corpus;
}

std::set<std::string> ids_of(const std::vector<dictnn::TweetRecord>& records) {
    std::set<std::string> out;
    for (const auto& r : records) out.insert(r.id);
    return out;
}

}  // namespace

TEST_CASE("label names round-trip and unknown labels throw") {
    CHECK(dictnn::label_name(Label::Hateful) == std::string("hateful"));
    CHECK(dictnn::label_name(Label::Abusive) == std::string("abusive"));
    CHECK(dictnn::label_name(Label::Normal) == std::string("normal"));
    CHECK(dictnn::label_from_string("hateful") == Label::Hateful);
    CHECK(dictnn::label_from_string("abusive") == Label::Abusive);
    CHECK(dictnn::label_from_string("normal") == Label::Normal);
    CHECK_THROWS_WITH_AS(dictnn::label_from_string("benign"),
                         doctest::Contains("benign"), std::runtime_error);
}

TEST_CASE("davidson loader reads class codes and optional ids") {
    SUBCASE("with an id column") {
        std::istringstream in(
            "id,class,tweet\n"
            "10,0,\"you vermin\"\n"
            "11,1,\"what an idiot\"\n"
            "12,2,\"nice day\"\n");
        const auto corpus = dictnn::load_davidson(in);
        REQUIRE(corpus.size() == 3);
        CHECK(corpus.records[0].id == "davidson:10");
        CHECK(corpus.records[0].label == Label::Hateful);
        CHECK(corpus.records[1].label == Label::Abusive);
        CHECK(corpus.records[2].label == Label::Normal);
        CHECK(corpus.records[1].text == "what an idiot");
        CHECK(corpus.spam_dropped == 0);
    }

    SUBCASE("without an id column: zero-based row ordinals") {
        std::istringstream in(
            "class,tweet\n"
            "2,first\n"
            "0,second\n");
        const auto corpus = dictnn::load_davidson(in);
        REQUIRE(corpus.size() == 2);
        CHECK(corpus.records[0].id == "davidson:0");
        CHECK(corpus.records[1].id == "davidson:1");
    }

    SUBCASE("extra columns are ignored, order is free") {
        std::istringstream in(
            "count,tweet,class\n"
            "3,hello there,2\n");
        const auto corpus = dictnn::load_davidson(in);
        REQUIRE(corpus.size() == 1);
        CHECK(corpus.records[0].text == "hello there");
    }

    SUBCASE("unknown class value names the line") {
        std::istringstream in("class,tweet\n0,ok\n7,bad\n");
        CHECK_THROWS_WITH_AS(dictnn::load_davidson(in), doctest::Contains("line 3"),
                             std::runtime_error);
    }

    SUBCASE("non-numeric class value is rejected") {
        std::istringstream in("class,tweet\nhateful,bad\n");
        CHECK_THROWS_WITH_AS(dictnn::load_davidson(in),
                             doctest::Contains("unknown class value 'hateful'"),
                             std::runtime_error);
    }

    SUBCASE("missing required column") {
        std::istringstream in("id,tweet\n1,hi\n");
        CHECK_THROWS_WITH_AS(dictnn::load_davidson(in),
                             doctest::Contains("'class'"), std::runtime_error);
    }

    SUBCASE("duplicate ids name the line") {
        std::istringstream in("id,class,tweet\n5,0,a\n5,1,b\n");
        CHECK_THROWS_WITH_AS(dictnn::load_davidson(in),
                             doctest::Contains("duplicate id 'davidson:5'"),
                             std::runtime_error);
    }

    SUBCASE("empty input") {
        std::istringstream in("");
        CHECK_THROWS_WITH_AS(dictnn::load_davidson(in), doctest::Contains("empty"),
                             std::runtime_error);
    }

    SUBCASE("custom class mapping") {
        dictnn::DavidsonMapping mapping{{5, Label::Normal}};
        std::istringstream in("class,tweet\n5,fine\n");
        const auto corpus = dictnn::load_davidson(in, mapping);
        REQUIRE(corpus.size() == 1);
        CHECK(corpus.records[0].label == Label::Normal);
    }
}

TEST_CASE("founta loader drops and counts spam") {
    std::istringstream in(
        "text,label\n"
        "you vermin,hateful\n"
        "buy my mixtape,spam\n"
        "what an idiot,abusive\n"
        "nice day,normal\n"
        "click here,spam\n");
    const auto corpus = dictnn::load_founta(in);
    REQUIRE(corpus.size() == 3);
    CHECK(corpus.spam_dropped == 2);
    // Ordinals advance across dropped rows so ids stay stable.
    CHECK(corpus.records[0].id == "founta:0");
    CHECK(corpus.records[1].id == "founta:2");
    CHECK(corpus.records[2].id == "founta:3");
    CHECK(corpus.records[0].label == Label::Hateful);
    CHECK(corpus.records[1].label == Label::Abusive);
    CHECK(corpus.records[2].label == Label::Normal);
}

TEST_CASE("founta loader error cases") {
    SUBCASE("unknown label names the line") {
        std::istringstream in("text,label\nok,normal\nbad,hatefull\n");
        CHECK_THROWS_WITH_AS(dictnn::load_founta(in),
                             doctest::Contains("line 3"), std::runtime_error);
    }
    SUBCASE("missing column") {
        std::istringstream in("text,class\nok,normal\n");
        CHECK_THROWS_WITH_AS(dictnn::load_founta(in), doctest::Contains("'label'"),
                             std::runtime_error);
    }
}

TEST_CASE("merge concatenates both sources and keeps the spam count") {
    std::istringstream davidson(
        "id,class,tweet\n"
        "1,0,a\n"
        "2,1,b\n"
        "3,2,c\n");
    std::istringstream founta(
        "text,label\n"
        "d,hateful\n"
        "e,spam\n"
        "f,abusive\n"
        "g,normal\n");
    const auto corpus = dictnn::load_merge(davidson, founta);
    REQUIRE(corpus.size() == 6);
    CHECK(corpus.spam_dropped == 1);
    CHECK(corpus.records[0].id == "davidson:1");
    CHECK(corpus.records[3].id == "founta:0");
    CHECK(corpus.class_counts() == std::array<std::size_t, 3>{2, 2, 2});
}

TEST_CASE("normalized corpus files round-trip") {
    dictnn::Corpus corpus;
    corpus.records.push_back({"davidson:1", "line with, comma", Label::Hateful});
    corpus.records.push_back({"founta:9", "quote \"inside\"", Label::Normal});
    corpus.records.push_back({"davidson:2", "plain", Label::Abusive});
    corpus.spam_dropped = 4;  // not persisted; derived stats only

    std::ostringstream out;
    dictnn::write_normalized(out, corpus);
    std::istringstream in(out.str());
    const auto back = dictnn::load_normalized(in);

    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.records[i].id == corpus.records[i].id);
        CHECK(back.records[i].text == corpus.records[i].text);
        CHECK(back.records[i].label == corpus.records[i].label);
    }

    SUBCASE("normalized loader rejects unknown labels with a line number") {
        std::istringstream bad("id,label,text\nx:1,fine,hello\n");
        CHECK_THROWS_WITH_AS(dictnn::load_normalized(bad),
                             doctest::Contains("line 2"), std::runtime_error);
    }
}

TEST_CASE("stratified split on 20/10 matches the floor rule exactly") {
    const auto corpus = synthetic_counts(20, 10, 0);
    const auto split = dictnn::stratified_split(corpus, 42);

    CHECK(dictnn::count_labels(split.train) == std::array<std::size_t, 3>{14, 7, 0});
    CHECK(dictnn::count_labels(split.validation) == std::array<std::size_t, 3>{3, 1, 0});
    CHECK(dictnn::count_labels(split.test) == std::array<std::size_t, 3>{3, 2, 0});

    // The three parts partition the corpus: disjoint by id, union = all ids.
    auto train_ids = ids_of(split.train);
    auto val_ids = ids_of(split.validation);
    auto test_ids = ids_of(split.test);
    CHECK(train_ids.size() == 21);
    CHECK(val_ids.size() == 4);
    CHECK(test_ids.size() == 5);
    std::set<std::string> all = train_ids;
    all.insert(val_ids.begin(), val_ids.end());
    all.insert(test_ids.begin(), test_ids.end());
    CHECK(all.size() == 30);
    CHECK(all == ids_of(corpus.records));
}

TEST_CASE("stratified split fractions hold within one record per class") {
    const auto corpus = synthetic_counts(1000, 100, 10);
    const auto split = dictnn::stratified_split(corpus, 7);
    const auto train = dictnn::count_labels(split.train);
    const auto val = dictnn::count_labels(split.validation);
    const auto test = dictnn::count_labels(split.test);
    const std::array<std::size_t, 3> totals{1000, 100, 10};
    for (std::size_t c = 0; c < 3; ++c) {
        CHECK(train[c] + val[c] + test[c] == totals[c]);
        CHECK(std::abs(static_cast<double>(train[c]) - 0.70 * totals[c]) <= 1.0);
        CHECK(std::abs(static_cast<double>(val[c]) - 0.15 * totals[c]) <= 1.0);
        CHECK(std::abs(static_cast<double>(test[c]) - 0.15 * totals[c]) <= 1.0);
    }
}

TEST_CASE("stratified split is deterministic per seed and varies across seeds") {
    const auto corpus = synthetic_counts(40, 30, 20);
    const auto a = dictnn::stratified_split(corpus, 1);
    const auto b = dictnn::stratified_split(corpus, 1);
    CHECK(ids_of(a.train) == ids_of(b.train));
    CHECK(ids_of(a.validation) == ids_of(b.validation));
    CHECK(ids_of(a.test) == ids_of(b.test));
    // Order is deterministic too, not just membership.
    for (std::size_t i = 0; i < a.train.size(); ++i) {
        CHECK(a.train[i].id == b.train[i].id);
    }

    const auto c = dictnn::stratified_split(corpus, 2);
    CHECK(ids_of(a.train) != ids_of(c.train));
}

TEST_CASE("stratified split rejects degenerate inputs") {
    SUBCASE("a present class with fewer than 3 records") {
        const auto corpus = synthetic_counts(10, 2, 10);
        CHECK_THROWS_WITH_AS(dictnn::stratified_split(corpus, 1),
                             doctest::Contains("abusive"), std::runtime_error);
    }
    SUBCASE("fractions that do not sum to 1") {
        const auto corpus = synthetic_counts(10, 10, 10);
        dictnn::SplitFractions f{0.5, 0.3, 0.3};
        CHECK_THROWS_WITH_AS(dictnn::stratified_split(corpus, f, 1),
                             doctest::Contains("sum to 1"), std::runtime_error);
    }
}

TEST_CASE("class weights follow inverse frequency") {
    SUBCASE("skewed counts") {
        const auto w = dictnn::class_weights({5000, 30000, 60000});
        CHECK(w[0] == doctest::Approx(6.333333333).epsilon(1e-9));
        CHECK(w[1] == doctest::Approx(1.055555556).epsilon(1e-9));
        CHECK(w[2] == doctest::Approx(0.527777778).epsilon(1e-9));
    }
    SUBCASE("small example") {
        const auto w = dictnn::class_weights({1, 1, 2});
        CHECK(w[0] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
        CHECK(w[1] == doctest::Approx(4.0 / 3.0).epsilon(1e-12));
        CHECK(w[2] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    }
    SUBCASE("zero counts are an error") {
        CHECK_THROWS_WITH_AS(dictnn::class_weights({5, 0, 5}),
                             doctest::Contains("abusive"), std::runtime_error);
    }
}

namespace {

std::vector<Label> label_vector(std::size_t hateful, std::size_t abusive,
                                std::size_t normal) {
    std::vector<Label> labels;
    labels.insert(labels.end(), hateful, Label::Hateful);
    labels.insert(labels.end(), abusive, Label::Abusive);
    labels.insert(labels.end(), normal, Label::Normal);
    return labels;
}

}  // namespace

TEST_CASE("shuffle batching covers every record exactly once per epoch") {
    const auto labels = label_vector(11, 11, 11);
    dictnn::Batcher batcher(labels, 16, dictnn::BatchMode::Shuffle, 3);

    const auto batches = batcher.epoch_batches(0);
    REQUIRE(batches.size() == 3);  // 33 records at batch 16: 16 + 16 + 1
    CHECK(batches[0].size() == 16);
    CHECK(batches[1].size() == 16);
    CHECK(batches[2].size() == 1);

    std::vector<std::size_t> seen;
    for (const auto& b : batches) seen.insert(seen.end(), b.begin(), b.end());
    std::sort(seen.begin(), seen.end());
    std::vector<std::size_t> expected(33);
    for (std::size_t i = 0; i < 33; ++i) expected[i] = i;
    CHECK(seen == expected);

    // Deterministic per (seed, epoch), independent of call order.
    CHECK(batcher.epoch_batches(5) == batcher.epoch_batches(5));
    CHECK(batcher.epoch_batches(0) == batches);
    CHECK(batcher.epoch_batches(1) != batches);

    dictnn::Batcher other(labels, 16, dictnn::BatchMode::Shuffle, 4);
    CHECK(other.epoch_batches(0) != batches);
}

TEST_CASE("weighted sampler draws a full epoch with rebalanced classes") {
    // 30/120/450 records: inverse-class-frequency sampling should pull each
    // class to roughly a third of the draws.
    const auto labels = label_vector(30, 120, 450);
    dictnn::Batcher batcher(labels, 16, dictnn::BatchMode::WeightedSampler, 9);

    const auto batches = batcher.epoch_batches(0);
    std::size_t total = 0;
    std::array<std::size_t, 3> drawn{0, 0, 0};
    for (const auto& b : batches) {
        CHECK(b.size() <= 16);
        for (std::size_t idx : b) {
            REQUIRE(idx < labels.size());
            drawn[static_cast<std::size_t>(labels[idx])]++;
            ++total;
        }
    }
    CHECK(total == labels.size());  // one "epoch" of draws, with replacement

    // Pearson chi-square against the uniform class split; 9.21 is the 1%
    // critical value at 2 degrees of freedom.
    const double expected = static_cast<double>(total) / 3.0;
    double chi2 = 0.0;
    for (std::size_t c = 0; c < 3; ++c) {
        const double d = static_cast<double>(drawn[c]) - expected;
        chi2 += d * d / expected;
    }
    CHECK(chi2 < 9.21);

    CHECK(batcher.epoch_batches(4) == batcher.epoch_batches(4));
    CHECK(batcher.epoch_batches(0) != batcher.epoch_batches(1));
}
