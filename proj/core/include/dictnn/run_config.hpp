#pragma once

#include <cstdint>
#include <string>

#include "dictnn/batching.hpp"
#include "dictnn/hate_dictionary.hpp"
#include "dictnn/optimizer.hpp"

namespace dictnn {

enum class BalancingMode { Sampler, ClassWeights };

BalancingMode balancing_from_string(std::string_view name);
const char* to_string(BalancingMode mode);

// Defaults are the selected configuration: adam, lr 0.01, class weights,
// scheduler off, batch 16, 90 epochs. The DICTNN_SEED environment variable
// overrides `seed` wherever a config is loaded.
struct RunConfig {
    std::string model = "1d";  // "1d" | "2d"
    OptimizerRule optimizer = OptimizerRule::Adam;
    double lr = 0.01;
    BalancingMode balancing = BalancingMode::ClassWeights;
    bool scheduler = false;
    int epochs = 90;
    int grid_epochs = 45;
    int batch_size = 16;
    std::uint64_t seed = 42;
    bool scale_unit_interval = false;
    double dictionary_cutoff = HateDictionary::kDefaultCutoff;

    // file locations
    std::string corpus_path;
    std::string splits_dir;
    std::string davidson_path;
    std::string founta_path;
    std::string dictionary_path;
    std::string vocab_path;
    std::string precomputed_path;  // optional: per-tweet scalar sequences
    std::string output_dir = "runs/out";

    // Using class weights forces plain shuffled batching; the sampler already
    // balances the stream, so it pairs with unit loss weights.
    BatchMode batch_mode() const {
        return balancing == BalancingMode::ClassWeights ? BatchMode::Shuffle
                                                        : BatchMode::WeightedSampler;
    }

    static RunConfig from_json(const std::string& text);
    static RunConfig from_json_file(const std::string& path);
    std::string to_json() const;
};

// Parses DICTNN_SEED (decimal unsigned) when set; bad values are an error.
void apply_seed_override(RunConfig& config);

}  // namespace dictnn
