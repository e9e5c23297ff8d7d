#include <benchmark/benchmark.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dictnn/fusion.hpp"
#include "dictnn/hate_dictionary.hpp"
#include "dictnn/loss.hpp"
#include "dictnn/network.hpp"
#include "dictnn/optimizer.hpp"
#include "dictnn/rng.hpp"
#include "dictnn/similarity.hpp"
#include "dictnn/text_clean.hpp"
#include "dictnn/token_scalars.hpp"
#include "dictnn/vocab.hpp"

namespace {

dictnn::HateDictionary make_dictionary(std::size_t entries) {
    std::ostringstream csv;
    csv << "term,offensiveness,unambiguous\n";
    dictnn::Rng rng(7);
    for (std::size_t i = 0; i < entries; ++i) {
        std::string term;
        const std::size_t len = 4 + rng.below(8);
        for (std::size_t k = 0; k < len; ++k) {
            term.push_back(static_cast<char>('a' + rng.below(26)));
        }
        csv << term << ',' << 20 + rng.below(80) << ','
            << (rng.below(2) ? "true" : "false") << '\n';
    }
    std::istringstream in(csv.str());
    return dictnn::HateDictionary::load(in);
}

dictnn::Vocab make_vocab() {
    std::ostringstream lines;
    lines << "[PAD]\n[UNK]\n[CLS]\n[SEP]\n##s\n##ing\n##ed\n";
    dictnn::Rng rng(11);
    std::set<std::string> seen;
    while (seen.size() < 2000) {
        std::string word;
        const std::size_t len = 3 + rng.below(7);
        for (std::size_t k = 0; k < len; ++k) {
            word.push_back(static_cast<char>('a' + rng.below(26)));
        }
        if (seen.insert(word).second) lines << word << '\n';
    }
    std::istringstream in(lines.str());
    return dictnn::Vocab::load(in);
}

void bm_similarity(benchmark::State& state) {
    const std::string a = "characteristically";
    const std::string b = "uncharacteristic";
    for (auto _ : state) {
        benchmark::DoNotOptimize(dictnn::similarity(a, b));
    }
}
BENCHMARK(bm_similarity);

void bm_token_score(benchmark::State& state) {
    const auto dict = make_dictionary(static_cast<std::size_t>(state.range(0)));
    // A non-default cutoff bypasses the memo cache, timing the full scan.
    for (auto _ : state) {
        benchmark::DoNotOptimize(dict.token_score("insufferable", 0.8));
    }
}
BENCHMARK(bm_token_score)->Arg(100)->Arg(1000);

void bm_clean_tweet(benchmark::State& state) {
    const std::string raw =
        "RT @SomeUser: Check this thread out \xF0\x9F\x98\x82\xF0\x9F\x98\x82 "
        "https://t.co/abcd1234 #trending 100% worth it!!";
    for (auto _ : state) {
        benchmark::DoNotOptimize(dictnn::clean_tweet(raw));
    }
}
BENCHMARK(bm_clean_tweet);

void bm_encode_scalars(benchmark::State& state) {
    const auto vocab = make_vocab();
    const std::string text =
        "unbelievable scenes at the match tonight with everyone celebrating wildly";
    for (auto _ : state) {
        benchmark::DoNotOptimize(dictnn::encode_scalars(text, vocab));
    }
}
BENCHMARK(bm_encode_scalars);

void bm_stretch_linear(benchmark::State& state) {
    std::vector<double> values(static_cast<std::size_t>(state.range(0)));
    dictnn::Rng rng(3);
    for (double& v : values) v = rng.uniform(0.0, 200.0);
    for (auto _ : state) {
        benchmark::DoNotOptimize(dictnn::stretch_linear(values, 120));
    }
}
BENCHMARK(bm_stretch_linear)->Arg(8)->Arg(120);

void bm_forward(benchmark::State& state, const std::string& arch) {
    auto net = dictnn::build_model<float>(arch, 42);
    const std::size_t rows = arch == "2d" ? 2 : 1;
    dictnn::Tensor<float> batch({16, 1, rows, dictnn::kMatrixCols});
    dictnn::Rng rng(5);
    for (float& v : batch.data) v = static_cast<float>(rng.uniform(0.0, 30.0));
    if (rows == 1) batch.shape = {16, 1, dictnn::kMatrixCols};
    dictnn::ForwardContext ctx;
    for (auto _ : state) {
        benchmark::DoNotOptimize(net.forward(batch, ctx));
    }
    state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK_CAPTURE(bm_forward, 1d, std::string("1d"));
BENCHMARK_CAPTURE(bm_forward, 2d, std::string("2d"));

void bm_train_step(benchmark::State& state, const std::string& arch) {
    auto net = dictnn::build_model<float>(arch, 42);
    const std::size_t rows = arch == "2d" ? 2 : 1;
    dictnn::Tensor<float> batch({16, 1, rows, dictnn::kMatrixCols});
    dictnn::Rng rng(5);
    for (float& v : batch.data) v = static_cast<float>(rng.uniform(0.0, 30.0));
    if (rows == 1) batch.shape = {16, 1, dictnn::kMatrixCols};
    std::vector<int> targets(16);
    for (int& t : targets) t = static_cast<int>(rng.below(3));
    dictnn::Optimizer<float> opt(dictnn::OptimizerRule::Adam, 0.001);
    dictnn::ForwardContext ctx{true, true};
    for (auto _ : state) {
        net.zero_grad();
        const auto& logits = net.forward(batch, ctx);
        auto loss = dictnn::cross_entropy_weighted(logits, targets, {1.0, 1.0, 1.0});
        net.backward(loss.dlogits);
        auto params = net.params();
        opt.step(params);
        benchmark::DoNotOptimize(loss.value);
    }
    state.SetItemsProcessed(state.iterations() * 16);
}
BENCHMARK_CAPTURE(bm_train_step, 1d, std::string("1d"));
BENCHMARK_CAPTURE(bm_train_step, 2d, std::string("2d"));

}  // namespace

BENCHMARK_MAIN();
