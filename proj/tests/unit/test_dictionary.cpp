#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>

#include "dictnn/hate_dictionary.hpp"
#include "dictnn/hatebase_ingest.hpp"

using dictnn::HateDictionary;

namespace {

HateDictionary load_csv(const std::string& body) {
    std::istringstream in("term,offensiveness,unambiguous\n" + body);
    return HateDictionary::load(in);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE_MESSAGE(in.good(), "cannot open " << path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST_CASE("load keeps single-word rows and drops multi-word rows") {
    auto dict = load_csv("slur,70,true\ntotal lowlife,70,true\nTrash,35,false\n");
    REQUIRE(dict.entries().size() == 2);
    CHECK(dict.dropped_multiword_count() == 1);
    CHECK(dict.entries()[0].term == "slur");
    CHECK(dict.entries()[1].term == "trash");  // lowercased
    CHECK(dict.entries()[1].offensiveness == 35);
    CHECK_FALSE(dict.entries()[1].unambiguous);
}

TEST_CASE("load rejects malformed rows with line numbers") {
    CHECK_THROWS_WITH_AS(load_csv("slur,not_a_number,true\n"),
                         doctest::Contains("line 2"), std::runtime_error);
    CHECK_THROWS_WITH_AS(load_csv("slur,70\n"), doctest::Contains("line 2"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(load_csv("slur,700,true\n"), doctest::Contains("line 2"),
                         std::runtime_error);
}

TEST_CASE("duplicate terms: last occurrence wins") {
    auto dict = load_csv("slur,70,true\nslur,10,false\n");
    REQUIRE(dict.entries().size() == 1);
    CHECK(dict.entries()[0].offensiveness == 10);
    CHECK_FALSE(dict.entries()[0].unambiguous);
}

TEST_CASE("unambiguous match doubles the score") {
    auto dict = load_csv("slur,70,true\n");
    CHECK(dict.token_score("slur") == 140.0);
}

TEST_CASE("ambiguous match keeps the raw score") {
    auto dict = load_csv("idiot,55,false\n");
    CHECK(dict.token_score("idiot") == 55.0);
}

TEST_CASE("multiple matches average their effective scores") {
    // "bitchy" matches both entries at the 0.85 cutoff:
    //   bitch (60, ambiguous) -> 60;  bitchy (50, unambiguous) -> 100.
    auto dict = load_csv("bitch,60,false\nbitchy,50,true\n");
    CHECK(dict.token_score("bitchy") == doctest::Approx(80.0).epsilon(1e-12));
}

TEST_CASE("no match scores zero") {
    auto dict = load_csv("slur,70,true\n");
    CHECK(dict.token_score("sunshine") == 0.0);
    CHECK(dict.token_score("") == 0.0);
}

TEST_CASE("cutoff boundary is inclusive") {
    // similarity("niggas","nigga") = 10/11 = 0.9090..; at cutoff 0.909 it
    // still matches, just above it does not.
    auto dict = load_csv("nigga,90,true\n");
    CHECK(dict.token_score("niggas", 10.0 / 11.0) == 180.0);
    CHECK(dict.token_score("niggas", 10.0 / 11.0 + 1e-9) == 0.0);
}

TEST_CASE("censored variant still matches via fuzzy similarity") {
    auto dict = load_csv("bitch,60,false\n");
    CHECK(dict.token_score("b!tch", 0.8) == 60.0);  // sim exactly 0.8
    CHECK(dict.token_score("b!tch") == 0.0);        // below default 0.85
}

TEST_CASE("score is deterministic and cache-transparent") {
    auto dict = load_csv("slur,70,true\nslug,40,false\n");
    const double first = dict.token_score("slur");
    const double second = dict.token_score("slur");  // memoized path
    CHECK(first == second);
}

TEST_CASE("ingest: midpoint policy fills null scores and counts them") {
    const std::string page = R"({"result": [
        {"term": "Alpha", "average_offensiveness": 80, "is_unambiguous": true},
        {"term": "beta", "average_offensiveness": null, "is_unambiguous": false}
    ]})";
    std::ostringstream csv;
    auto stats = dictnn::ingest_hatebase_json({page}, csv,
                                              dictnn::NullScorePolicy::Midpoint);
    CHECK(stats.rows_written == 2);
    CHECK(stats.null_scores == 1);
    CHECK(stats.rows_skipped == 0);
    CHECK(csv.str() ==
          "term,offensiveness,unambiguous\nalpha,80,true\nbeta,50,false\n");
}

TEST_CASE("ingest: drop policy skips null scores") {
    const std::string page = R"({"result": [
        {"term": "beta", "average_offensiveness": null, "is_unambiguous": false}
    ]})";
    std::ostringstream csv;
    auto stats =
        dictnn::ingest_hatebase_json({page}, csv, dictnn::NullScorePolicy::Drop);
    CHECK(stats.rows_written == 0);
    CHECK(stats.null_scores == 1);
    CHECK(stats.rows_skipped == 1);
}

TEST_CASE("ingest: fractional scores round, out-of-range clamps, junk skipped") {
    const std::string page = R"({"result": [
        {"term": "gamma", "average_offensiveness": 80.4, "is_unambiguous": true},
        {"term": "delta", "average_offensiveness": 140.0, "is_unambiguous": false},
        {"term": "epsilon", "average_offensiveness": "high", "is_unambiguous": false},
        {"no_term": true}
    ]})";
    std::ostringstream csv;
    auto stats = dictnn::ingest_hatebase_json({page}, csv,
                                              dictnn::NullScorePolicy::Midpoint);
    CHECK(stats.rows_written == 2);
    CHECK(stats.rows_skipped == 2);
    CHECK(csv.str() ==
          "term,offensiveness,unambiguous\ngamma,80,true\ndelta,100,false\n");
}

TEST_CASE("ingest: bad JSON and missing result array are errors") {
    std::ostringstream csv;
    CHECK_THROWS_AS(dictnn::ingest_hatebase_json({"not json"}, csv,
                                                 dictnn::NullScorePolicy::Midpoint),
                    std::runtime_error);
    CHECK_THROWS_AS(dictnn::ingest_hatebase_json({R"({"rows": []})"}, csv,
                                                 dictnn::NullScorePolicy::Midpoint),
                    std::runtime_error);
}

TEST_CASE("ingesting the sample pages reproduces the shipped dictionary") {
    const std::string root = DICTNN_SOURCE_DIR;
    const std::string page1 = slurp(root + "/data/sample/hatebase_page_1.json");
    const std::string page2 = slurp(root + "/data/sample/hatebase_page_2.json");
    std::ostringstream csv;
    auto stats = dictnn::ingest_hatebase_json({page1, page2}, csv,
                                              dictnn::NullScorePolicy::Midpoint);
    CHECK(stats.rows_written == 9);
    CHECK(stats.rows_skipped == 1);  // the entry without a term
    CHECK(stats.null_scores == 1);   // bonehead
    CHECK(csv.str() == slurp(root + "/data/sample/dictionary.csv"));

    // The loader then drops the multi-word row.
    std::istringstream in(csv.str());
    auto dict = HateDictionary::load(in);
    CHECK(dict.entries().size() == 8);
    CHECK(dict.dropped_multiword_count() == 1);
}
