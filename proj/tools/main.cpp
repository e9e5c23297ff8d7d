// Command-line front end: dictionary ingestion, corpus preparation,
// vectorization, training, grid search, evaluation and score reports.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <unordered_map>

#include <CLI11.hpp>

#include "dictnn/checkpoint.hpp"
#include "dictnn/corpus.hpp"
#include "dictnn/evaluate.hpp"
#include "dictnn/fusion.hpp"
#include "dictnn/grid.hpp"
#include "dictnn/hate_dictionary.hpp"
#include "dictnn/hatebase_ingest.hpp"
#include "dictnn/run_config.hpp"
#include "dictnn/split.hpp"
#include "dictnn/token_scalars.hpp"
#include "dictnn/train.hpp"
#include "dictnn/vectorizer.hpp"
#include "dictnn/vocab.hpp"

namespace fs = std::filesystem;
using namespace dictnn;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    fs::path p(path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

std::vector<std::string> read_id_list(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open id list " + path);
    std::vector<std::string> ids;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty()) ids.push_back(line);
    }
    return ids;
}

void write_id_list(const std::string& path, const std::vector<TweetRecord>& records) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write id list " + path);
    for (const TweetRecord& r : records) out << r.id << '\n';
}

HateDictionary load_dictionary_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open dictionary " + path);
    return HateDictionary::load(in);
}

Corpus load_corpus_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus " + path);
    return load_normalized(in);
}

std::vector<TweetRecord> select_by_ids(const Corpus& corpus,
                                       const std::vector<std::string>& ids) {
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < corpus.records.size(); ++i) {
        index.emplace(corpus.records[i].id, i);
    }
    std::vector<TweetRecord> out;
    out.reserve(ids.size());
    for (const std::string& id : ids) {
        auto it = index.find(id);
        if (it == index.end()) {
            throw std::runtime_error("id '" + id + "' not present in corpus");
        }
        out.push_back(corpus.records[it->second]);
    }
    return out;
}

struct LoadedSplits {
    std::vector<TweetRecord> train, validation, test;
};

LoadedSplits load_splits(const RunConfig& cfg) {
    if (cfg.corpus_path.empty() || cfg.splits_dir.empty()) {
        throw std::runtime_error("config: data.corpus and data.splits_dir are required");
    }
    const Corpus corpus = load_corpus_file(cfg.corpus_path);
    const fs::path dir(cfg.splits_dir);
    LoadedSplits splits;
    splits.train = select_by_ids(corpus, read_id_list((dir / "train.ids").string()));
    splits.validation =
        select_by_ids(corpus, read_id_list((dir / "validation.ids").string()));
    splits.test = select_by_ids(corpus, read_id_list((dir / "test.ids").string()));
    return splits;
}

const std::vector<TweetRecord>& split_by_name(const LoadedSplits& splits,
                                              const std::string& name) {
    if (name == "train") return splits.train;
    if (name == "validation") return splits.validation;
    if (name == "test") return splits.test;
    throw std::runtime_error("unknown split '" + name + "'");
}

// Owns the loaded artifacts the vectorizer points into.
struct Assets {
    std::optional<Vocab> vocab;
    std::optional<HateDictionary> dict;
    std::shared_ptr<const ScalarProvider> provider;
};

Assets load_assets(const RunConfig& cfg, bool need_dict) {
    Assets assets;
    if (!cfg.vocab_path.empty()) assets.vocab = Vocab::load_file(cfg.vocab_path);
    if (!cfg.dictionary_path.empty()) {
        assets.dict = load_dictionary_file(cfg.dictionary_path);
    }
    if (!cfg.precomputed_path.empty()) {
        std::ifstream in(cfg.precomputed_path);
        if (!in) throw std::runtime_error("cannot open " + cfg.precomputed_path);
        assets.provider =
            std::make_shared<PrecomputedScalarProvider>(load_precomputed(in));
    }
    if (!assets.vocab && !assets.provider) {
        throw std::runtime_error(
            "config: data.vocab or data.precomputed is required for vectorization");
    }
    if (need_dict && !assets.dict) {
        throw std::runtime_error("config: data.dictionary is required in 2d mode");
    }
    return assets;
}

TweetVectorizer make_vectorizer(const RunConfig& cfg, const Assets& assets,
                                bool two_d) {
    return TweetVectorizer(assets.vocab ? &*assets.vocab : nullptr,
                           assets.dict ? &*assets.dict : nullptr, two_d,
                           cfg.scale_unit_interval, cfg.dictionary_cutoff,
                           assets.provider);
}

std::uint64_t effective_seed(std::uint64_t cli_seed) {
    RunConfig tmp;
    tmp.seed = cli_seed;
    apply_seed_override(tmp);
    return tmp.seed;
}

void print_counts(const char* heading, const std::array<std::size_t, 3>& counts) {
    std::cout << heading << ": hateful " << counts[0] << ", abusive " << counts[1]
              << ", normal " << counts[2] << " (total "
              << counts[0] + counts[1] + counts[2] << ")\n";
}

// ------------------------------------------------------------ subcommands

void run_dict_ingest(const std::vector<std::string>& page_paths,
                     const std::string& out_path, const std::string& null_policy) {
    std::vector<std::string> pages;
    pages.reserve(page_paths.size());
    for (const std::string& p : page_paths) pages.push_back(read_file(p));
    const NullScorePolicy policy = null_policy == "drop" ? NullScorePolicy::Drop
                                                         : NullScorePolicy::Midpoint;
    std::ostringstream csv;
    IngestStats stats = ingest_hatebase_json(pages, csv, policy);
    write_file(out_path, csv.str());
    std::cout << "wrote " << stats.rows_written << " terms to " << out_path << " ("
              << stats.rows_skipped << " skipped, " << stats.null_scores
              << " null scores)\n";
}

void run_prepare(const std::string& davidson_path, const std::string& founta_path,
                 const std::string& out_dir, std::uint64_t seed) {
    std::ifstream davidson(davidson_path);
    if (!davidson) throw std::runtime_error("cannot open " + davidson_path);
    std::ifstream founta(founta_path);
    if (!founta) throw std::runtime_error("cannot open " + founta_path);

    const Corpus corpus = load_merge(davidson, founta);
    print_counts("merged corpus", corpus.class_counts());
    std::cout << "spam rows dropped: " << corpus.spam_dropped << "\n";

    fs::create_directories(out_dir);
    {
        std::ofstream out(fs::path(out_dir) / "corpus.csv");
        if (!out) throw std::runtime_error("cannot write corpus.csv in " + out_dir);
        write_normalized(out, corpus);
    }

    const SplitSet splits = stratified_split(corpus, seed);
    write_id_list((fs::path(out_dir) / "train.ids").string(), splits.train);
    write_id_list((fs::path(out_dir) / "validation.ids").string(), splits.validation);
    write_id_list((fs::path(out_dir) / "test.ids").string(), splits.test);
    std::cout << "split sizes: train " << splits.train.size() << ", validation "
              << splits.validation.size() << ", test " << splits.test.size()
              << " (seed " << seed << ")\n";
}

void run_vectorize(const RunConfig& cfg, const std::string& mode,
                   const std::string& ids_path, const std::string& out_path) {
    const bool two_d = mode == "2d";
    const Corpus corpus = load_corpus_file(cfg.corpus_path);
    std::vector<TweetRecord> records =
        ids_path.empty() ? corpus.records : select_by_ids(corpus, read_id_list(ids_path));

    const Assets assets = load_assets(cfg, two_d);
    const TweetVectorizer vectorizer = make_vectorizer(cfg, assets, two_d);

    fs::path p(out_path);
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + out_path);
    for (const TweetRecord& r : records) {
        write_matrix_record(out, vectorizer.matrix(r));
    }
    std::cout << "wrote " << records.size() << " " << mode << " records to " << out_path
              << "\n";
}

void run_train(const RunConfig& cfg) {
    const bool two_d = cfg.model == "2d";
    const LoadedSplits splits = load_splits(cfg);
    const Assets assets = load_assets(cfg, two_d);
    const TweetVectorizer vectorizer = make_vectorizer(cfg, assets, two_d);

    const VectorizedSet train_set = vectorize_records(splits.train, vectorizer);
    const VectorizedSet val_set = vectorize_records(splits.validation, vectorizer);

    fs::create_directories(cfg.output_dir);
    write_file((fs::path(cfg.output_dir) / "config.json").string(), cfg.to_json());

    const std::string checkpoint_dir = (fs::path(cfg.output_dir) / "checkpoint").string();
    const TrainResult result = train_model(cfg, train_set, val_set, checkpoint_dir);

    {
        std::ofstream out(fs::path(cfg.output_dir) / "history.csv");
        write_history_csv(out, result.history);
    }
    if (result.best_epoch >= 0) {
        write_file((fs::path(cfg.output_dir) / "best_validation_metrics.json").string(),
                   metrics_json(result.best_val_report) + "\n");
    }
    std::cout << "status: " << result.status << "\n";
    if (result.best_epoch >= 0) {
        std::cout << "best epoch: " << result.best_epoch << " (validation macro F1 "
                  << result.best_val_macro_f1 << ")\n"
                  << "checkpoint: " << checkpoint_dir << "\n";
    }
    if (!result.ok()) throw std::runtime_error("training failed: " + result.status);
}

void run_grid_search(const RunConfig& cfg) {
    const LoadedSplits splits = load_splits(cfg);
    const Assets assets = load_assets(cfg, /*need_dict=*/false);
    const TweetVectorizer vectorizer = make_vectorizer(cfg, assets, /*two_d=*/false);

    const VectorizedSet train_set = vectorize_records(splits.train, vectorizer);
    const VectorizedSet val_set = vectorize_records(splits.validation, vectorizer);

    const GridOutcome outcome = grid_search(cfg, train_set, val_set);

    fs::create_directories(cfg.output_dir);
    write_file((fs::path(cfg.output_dir) / "grid_results.csv").string(),
               grid_results_csv(outcome));

    std::vector<double> scores;
    for (const GridRunResult& r : outcome.results) {
        if (!r.failed) scores.push_back(r.best_val_macro_f1);
    }
    if (!scores.empty()) {
        const std::vector<double> evp = expected_validation_performance(scores);
        std::ostringstream out;
        out << "budget,expected_best_val_macro_f1\n";
        for (std::size_t k = 0; k < evp.size(); ++k) {
            out << k + 1 << ',' << evp[k] << '\n';
        }
        write_file((fs::path(cfg.output_dir) / "evp.csv").string(), out.str());
    }

    std::cout << grid_results_csv(outcome);
    if (outcome.argmax < 0) throw std::runtime_error("grid search: every run failed");
}

void run_evaluate(const RunConfig& cfg, const std::string& checkpoint_dir,
                  const std::string& split_name) {
    LoadedCheckpoint loaded = load_checkpoint(checkpoint_dir);
    const bool two_d = loaded.manifest.architecture == "2d";

    const LoadedSplits splits = load_splits(cfg);
    const Assets assets = load_assets(cfg, two_d);
    const TweetVectorizer vectorizer = make_vectorizer(cfg, assets, two_d);
    const VectorizedSet set =
        vectorize_records(split_by_name(splits, split_name), vectorizer);

    const EvaluationArtifacts artifacts =
        evaluate_set(loaded.net, set, static_cast<std::size_t>(cfg.batch_size));

    const fs::path out_dir(cfg.output_dir);
    fs::create_directories(out_dir);
    write_file((out_dir / ("metrics_" + split_name + ".json")).string(),
               artifacts.json + "\n");
    write_file((out_dir / ("report_" + split_name + ".txt")).string(), artifacts.table);
    write_file((out_dir / ("confusion_" + split_name + ".csv")).string(),
               artifacts.confusion_csv);
    write_file((out_dir / ("confusion_pct_" + split_name + ".csv")).string(),
               artifacts.confusion_pct_csv);

    std::cout << "architecture " << loaded.manifest.architecture << ", checkpoint epoch "
              << loaded.manifest.epoch << ", split " << split_name << "\n"
              << artifacts.table;
}

void run_hate_scores(const RunConfig& cfg, const std::string& split_name) {
    if (cfg.dictionary_path.empty()) {
        throw std::runtime_error("config: data.dictionary is required");
    }
    const HateDictionary dict = load_dictionary_file(cfg.dictionary_path);
    const LoadedSplits splits = load_splits(cfg);
    const auto means =
        avg_hate_score_per_class(split_by_name(splits, split_name), dict,
                                 cfg.dictionary_cutoff);

    std::ostringstream json;
    json << "{\n  \"split\": \"" << split_name << "\"";
    for (const auto& [label, mean] : means) {
        json << ",\n  \"" << label_name(label) << "\": " << mean;
    }
    json << "\n}\n";
    fs::create_directories(cfg.output_dir);
    write_file((fs::path(cfg.output_dir) / ("hate_scores_" + split_name + ".json")).string(),
               json.str());

    for (int c = 0; c < 3; ++c) {
        const Label label = static_cast<Label>(c);
        auto it = means.find(label);
        std::cout << "avg dictionary score per tweet, " << label_name(label) << ": ";
        if (it == means.end()) {
            std::cout << "(no records)\n";
        } else {
            std::cout << it->second << "\n";
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dictionary-fused tweet classification toolkit"};
    app.require_subcommand(1);

    // dict ingest
    auto* dict_cmd = app.add_subcommand("dict", "dictionary utilities");
    dict_cmd->require_subcommand(1);
    auto* ingest = dict_cmd->add_subcommand("ingest", "convert lexicon JSON pages to CSV");
    std::vector<std::string> ingest_pages;
    std::string ingest_out;
    std::string ingest_null = "midpoint";
    ingest->add_option("--pages", ingest_pages, "lexicon API result pages (JSON files)")
        ->required()
        ->check(CLI::ExistingFile);
    ingest->add_option("--out", ingest_out, "output dictionary CSV")->required();
    ingest->add_option("--null-score", ingest_null, "null offensiveness policy")
        ->check(CLI::IsMember({"midpoint", "drop"}));
    ingest->callback([&] { run_dict_ingest(ingest_pages, ingest_out, ingest_null); });

    // prepare
    auto* prepare = app.add_subcommand("prepare", "merge sources, split, normalize");
    std::string prep_davidson, prep_founta, prep_out;
    std::uint64_t prep_seed = 42;
    prepare->add_option("--davidson", prep_davidson, "davidson-format CSV")
        ->required()
        ->check(CLI::ExistingFile);
    prepare->add_option("--founta", prep_founta, "founta-format CSV")
        ->required()
        ->check(CLI::ExistingFile);
    prepare->add_option("--out-dir", prep_out, "output directory")->required();
    prepare->add_option("--seed", prep_seed, "split shuffle seed");
    prepare->callback(
        [&] { run_prepare(prep_davidson, prep_founta, prep_out, effective_seed(prep_seed)); });

    // vectorize
    auto* vectorize = app.add_subcommand("vectorize", "dump model input matrices");
    std::string vec_mode, vec_ids, vec_out, vec_config;
    vectorize->add_option("--config", vec_config, "run config JSON")
        ->required()
        ->check(CLI::ExistingFile);
    vectorize->add_option("--mode", vec_mode, "1d or 2d")
        ->required()
        ->check(CLI::IsMember({"1d", "2d"}));
    vectorize->add_option("--ids", vec_ids, "id list (defaults to the whole corpus)");
    vectorize->add_option("--out", vec_out, "output binary file")->required();
    vectorize->callback([&] {
        run_vectorize(RunConfig::from_json_file(vec_config), vec_mode, vec_ids, vec_out);
    });

    // train
    auto* train_cmd = app.add_subcommand("train", "train one model per the config");
    std::string train_config;
    train_cmd->add_option("--config", train_config, "run config JSON")
        ->required()
        ->check(CLI::ExistingFile);
    train_cmd->callback([&] { run_train(RunConfig::from_json_file(train_config)); });

    // grid-search
    auto* grid_cmd = app.add_subcommand("grid-search", "36-point hyperparameter sweep");
    std::string grid_config;
    grid_cmd->add_option("--config", grid_config, "run config JSON")
        ->required()
        ->check(CLI::ExistingFile);
    grid_cmd->callback([&] { run_grid_search(RunConfig::from_json_file(grid_config)); });

    // evaluate
    auto* eval_cmd = app.add_subcommand("evaluate", "evaluate a checkpoint on a split");
    std::string eval_config, eval_checkpoint, eval_split = "test";
    eval_cmd->add_option("--config", eval_config, "run config JSON")
        ->required()
        ->check(CLI::ExistingFile);
    eval_cmd->add_option("--checkpoint", eval_checkpoint, "checkpoint directory")
        ->required()
        ->check(CLI::ExistingDirectory);
    eval_cmd->add_option("--split", eval_split, "test or validation")
        ->check(CLI::IsMember({"test", "validation"}));
    eval_cmd->callback([&] {
        run_evaluate(RunConfig::from_json_file(eval_config), eval_checkpoint, eval_split);
    });

    // report hate-scores
    auto* report_cmd = app.add_subcommand("report", "analysis reports");
    report_cmd->require_subcommand(1);
    auto* scores_cmd =
        report_cmd->add_subcommand("hate-scores", "per-class mean dictionary scores");
    std::string scores_config, scores_split = "test";
    scores_cmd->add_option("--config", scores_config, "run config JSON")
        ->required()
        ->check(CLI::ExistingFile);
    scores_cmd->add_option("--split", scores_split, "train, validation or test")
        ->check(CLI::IsMember({"train", "validation", "test"}));
    scores_cmd->callback(
        [&] { run_hate_scores(RunConfig::from_json_file(scores_config), scores_split); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
