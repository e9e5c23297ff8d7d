#include <algorithm>
#include <cstdlib>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dictnn/grid.hpp"
#include "dictnn/rng.hpp"
#include "dictnn/run_config.hpp"
#include "dictnn/vectorizer.hpp"
#include "doctest.h"

using dictnn::BalancingMode;
using dictnn::OptimizerRule;
using dictnn::RunConfig;

namespace {

// Tests below must not inherit a seed override from the environment.
struct ClearSeedEnv {
    ClearSeedEnv() { unsetenv("DICTNN_SEED"); }
    ~ClearSeedEnv() { unsetenv("DICTNN_SEED"); }
};

}  // namespace

TEST_CASE("run config defaults are the selected configuration") {
    ClearSeedEnv guard;
    const RunConfig c = RunConfig::from_json("{}");
    CHECK(c.model == "1d");
    CHECK(c.optimizer == OptimizerRule::Adam);
    CHECK(c.lr == 0.01);
    CHECK(c.balancing == BalancingMode::ClassWeights);
    CHECK_FALSE(c.scheduler);
    CHECK(c.epochs == 90);
    CHECK(c.grid_epochs == 45);
    CHECK(c.batch_size == 16);
    CHECK(c.seed == 42);
    CHECK_FALSE(c.scale_unit_interval);
    CHECK(c.dictionary_cutoff == 0.85);
    CHECK(c.output_dir == "runs/out");
}

TEST_CASE("run config json round-trips") {
    ClearSeedEnv guard;
    RunConfig c;
    c.model = "2d";
    c.optimizer = OptimizerRule::RmsProp;
    c.lr = 0.001;
    c.balancing = BalancingMode::Sampler;
    c.scheduler = true;
    c.epochs = 7;
    c.grid_epochs = 3;
    c.batch_size = 8;
    c.seed = 99;
    c.scale_unit_interval = true;
    c.dictionary_cutoff = 0.9;
    c.corpus_path = "work/corpus.csv";
    c.splits_dir = "work";
    c.vocab_path = "v.txt";
    c.dictionary_path = "d.csv";
    c.output_dir = "runs/x";

    const RunConfig back = RunConfig::from_json(c.to_json());
    CHECK(back.model == "2d");
    CHECK(back.optimizer == OptimizerRule::RmsProp);
    CHECK(back.lr == 0.001);
    CHECK(back.balancing == BalancingMode::Sampler);
    CHECK(back.scheduler);
    CHECK(back.epochs == 7);
    CHECK(back.grid_epochs == 3);
    CHECK(back.batch_size == 8);
    CHECK(back.seed == 99);
    CHECK(back.scale_unit_interval);
    CHECK(back.dictionary_cutoff == 0.9);
    CHECK(back.corpus_path == "work/corpus.csv");
    CHECK(back.splits_dir == "work");
    CHECK(back.vocab_path == "v.txt");
    CHECK(back.dictionary_path == "d.csv");
    CHECK(back.output_dir == "runs/x");
}

TEST_CASE("run config accepts partial json and null paths") {
    ClearSeedEnv guard;
    const RunConfig c = RunConfig::from_json(
        R"({"model": "2d", "lr": 0.001, "data": {"corpus": "c.csv", "precomputed": null}})");
    CHECK(c.model == "2d");
    CHECK(c.lr == 0.001);
    CHECK(c.epochs == 90);  // untouched default
    CHECK(c.corpus_path == "c.csv");
    CHECK(c.precomputed_path.empty());
}

TEST_CASE("run config validation") {
    ClearSeedEnv guard;
    CHECK_THROWS_WITH_AS(RunConfig::from_json("{"), doctest::Contains("invalid JSON"),
                         std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"model": "3d"})"),
                         doctest::Contains("1d or 2d"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"optimizer": "adamw"})"),
                         doctest::Contains("adamw"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"balancing": "oversample"})"),
                         doctest::Contains("oversample"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"lr": 0})"),
                         doctest::Contains("lr"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"lr": -0.1})"),
                         doctest::Contains("lr"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"epochs": -1})"),
                         doctest::Contains("epochs"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json(R"({"batch_size": 0})"),
                         doctest::Contains("batch_size"), std::runtime_error);
    CHECK_THROWS_WITH_AS(RunConfig::from_json_file("/nonexistent/cfg.json"),
                         doctest::Contains("cannot open"), std::runtime_error);
}

TEST_CASE("seed override comes from the environment") {
    ClearSeedEnv guard;
    SUBCASE("valid override wins over the file value") {
        setenv("DICTNN_SEED", "123", 1);
        const RunConfig c = RunConfig::from_json(R"({"seed": 7})");
        CHECK(c.seed == 123);
    }
    SUBCASE("non-numeric override is an error") {
        setenv("DICTNN_SEED", "12x", 1);
        CHECK_THROWS_WITH_AS(RunConfig::from_json("{}"),
                             doctest::Contains("12x"), std::runtime_error);
    }
    SUBCASE("empty override is ignored") {
        setenv("DICTNN_SEED", "", 1);
        const RunConfig c = RunConfig::from_json(R"({"seed": 7})");
        CHECK(c.seed == 7);
    }
}

TEST_CASE("balancing determines the batching mode") {
    ClearSeedEnv guard;
    RunConfig c;
    c.balancing = BalancingMode::ClassWeights;
    CHECK(c.batch_mode() == dictnn::BatchMode::Shuffle);
    c.balancing = BalancingMode::Sampler;
    CHECK(c.batch_mode() == dictnn::BatchMode::WeightedSampler);

    CHECK(dictnn::balancing_from_string("sampler") == BalancingMode::Sampler);
    CHECK(dictnn::balancing_from_string("class_weights") == BalancingMode::ClassWeights);
    CHECK(dictnn::to_string(BalancingMode::Sampler) == std::string("sampler"));
    CHECK_THROWS_AS(dictnn::balancing_from_string("none"), std::runtime_error);
}

TEST_CASE("the hyperparameter grid is the full 36-point cross product") {
    const auto grid = dictnn::enumerate_grid();
    REQUIRE(grid.size() == 36);

    // Every combination appears exactly once.
    std::set<std::tuple<int, double, int, bool>> seen;
    for (const auto& p : grid) {
        seen.insert({static_cast<int>(p.optimizer), p.lr,
                     static_cast<int>(p.balancing), p.scheduler});
    }
    CHECK(seen.size() == 36);

    // Nesting: optimizer, then lr, then balancing, then scheduler.
    CHECK(grid[0].optimizer == OptimizerRule::Adam);
    CHECK(grid[0].lr == 1e-4);
    CHECK(grid[0].balancing == BalancingMode::Sampler);
    CHECK(grid[0].scheduler == true);
    CHECK(grid[1].scheduler == false);
    CHECK(grid[2].balancing == BalancingMode::ClassWeights);
    CHECK(grid[4].lr == 1e-3);
    CHECK(grid[12].optimizer == OptimizerRule::RmsProp);
    CHECK(grid[24].optimizer == OptimizerRule::Sgd);
    CHECK(grid[35].optimizer == OptimizerRule::Sgd);
    CHECK(grid[35].lr == 1e-2);
    CHECK(grid[35].balancing == BalancingMode::ClassWeights);
    CHECK(grid[35].scheduler == false);

    // The configuration selected as the default is on the grid.
    bool found = false;
    for (const auto& p : grid) {
        found = found || (p.optimizer == OptimizerRule::Adam && p.lr == 1e-2 &&
                          p.balancing == BalancingMode::ClassWeights && !p.scheduler);
    }
    CHECK(found);
}

TEST_CASE("expected validation performance closed forms") {
    SUBCASE("scores {0, 1}") {
        const auto curve = dictnn::expected_validation_performance({0.0, 1.0});
        REQUIRE(curve.size() == 2);
        CHECK(curve[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(curve[1] == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("input order does not matter") {
        const auto curve = dictnn::expected_validation_performance({1.0, 0.0});
        CHECK(curve[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(curve[1] == doctest::Approx(0.75).epsilon(1e-12));
    }
    SUBCASE("a single score gives a flat curve") {
        const auto curve = dictnn::expected_validation_performance({0.5});
        REQUIRE(curve.size() == 1);
        CHECK(curve[0] == doctest::Approx(0.5).epsilon(1e-12));
    }
    SUBCASE("three scores, hand-expanded") {
        // k=1 is the mean; k=3 weights the order statistics by i^3 - (i-1)^3.
        const auto curve = dictnn::expected_validation_performance({0.2, 0.4, 0.9});
        REQUIRE(curve.size() == 3);
        CHECK(curve[0] == doctest::Approx(0.5).epsilon(1e-12));
        CHECK(curve[2] ==
              doctest::Approx((0.2 * 1 + 0.4 * 7 + 0.9 * 19) / 27.0).epsilon(1e-12));
    }
    SUBCASE("curve is non-decreasing and bounded by the maximum") {
        dictnn::Rng rng(31);
        std::vector<double> scores;
        for (int i = 0; i < 20; ++i) scores.push_back(rng.uniform());
        const double max = *std::max_element(scores.begin(), scores.end());
        const auto curve = dictnn::expected_validation_performance(scores);
        REQUIRE(curve.size() == scores.size());
        for (std::size_t k = 1; k < curve.size(); ++k) {
            CHECK(curve[k] >= curve[k - 1] - 1e-12);
        }
        CHECK(curve.back() <= max + 1e-12);
    }
    SUBCASE("no scores is an error") {
        CHECK_THROWS_WITH_AS(dictnn::expected_validation_performance({}),
                             doctest::Contains("no scores"), std::runtime_error);
    }
}

namespace {

// A trivially separable 1D set: each class occupies its own value band.
dictnn::VectorizedSet toy_set(std::size_t per_class, std::uint64_t seed) {
    dictnn::Rng rng(seed);
    dictnn::VectorizedSet set;
    for (int c = 0; c < 3; ++c) {
        for (std::size_t i = 0; i < per_class; ++i) {
            dictnn::TweetMatrix m;
            m.rows = 1;
            for (std::size_t col = 0; col < dictnn::kMatrixCols; ++col) {
                m.at(0, col) = static_cast<float>(10.0 + 40.0 * c + rng.uniform(-3.0, 3.0));
            }
            set.matrices.push_back(m);
            set.labels.push_back(c);
        }
    }
    return set;
}

}  // namespace

TEST_CASE("grid search over an explicit two-point grid") {
    ClearSeedEnv guard;
    const auto train = toy_set(20, 1);
    const auto val = toy_set(5, 2);

    RunConfig base;
    base.grid_epochs = 3;
    base.batch_size = 8;
    base.seed = 11;

    const std::vector<dictnn::GridPoint> points{
        {OptimizerRule::Adam, 0.01, BalancingMode::ClassWeights, false},
        {OptimizerRule::Sgd, 1e-4, BalancingMode::Sampler, false},
    };
    const auto outcome = dictnn::grid_search_points(base, points, train, val);

    REQUIRE(outcome.results.size() == 2);
    CHECK(outcome.results[0].point.optimizer == OptimizerRule::Adam);
    CHECK(outcome.results[1].point.optimizer == OptimizerRule::Sgd);
    REQUIRE(outcome.argmax >= 0);
    REQUIRE(outcome.argmax < 2);

    double best = -1.0;
    for (const auto& r : outcome.results) {
        CHECK_FALSE(r.failed);
        CHECK(r.best_val_macro_f1 >= 0.0);
        CHECK(r.best_val_macro_f1 <= 1.0);
        best = std::max(best, r.best_val_macro_f1);
    }
    CHECK(outcome.results[static_cast<std::size_t>(outcome.argmax)].best_val_macro_f1 ==
          best);

    const std::string csv = dictnn::grid_results_csv(outcome);
    CHECK(csv.find("optimizer,lr,balancing,scheduler,status,best_epoch,"
                   "best_val_macro_f1\n") == 0);
    CHECK(csv.find("adam,0.01,class_weights,off,ok,") != std::string::npos);
    CHECK(csv.find("sgd,0.0001,sampler,off,ok,") != std::string::npos);
    CHECK(csv.find("# best:") != std::string::npos);
}
