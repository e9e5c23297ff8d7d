#include "dictnn/run_config.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace dictnn {

BalancingMode balancing_from_string(std::string_view name) {
    if (name == "sampler") return BalancingMode::Sampler;
    if (name == "class_weights") return BalancingMode::ClassWeights;
    throw std::runtime_error("unknown balancing mode '" + std::string(name) +
                             "' (expected sampler or class_weights)");
}

const char* to_string(BalancingMode mode) {
    return mode == BalancingMode::Sampler ? "sampler" : "class_weights";
}

namespace {

void read_string(const nlohmann::json& j, const char* key, std::string& out) {
    if (j.contains(key) && !j.at(key).is_null()) out = j.at(key).get<std::string>();
}

}  // namespace

RunConfig RunConfig::from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error(std::string("config: invalid JSON: ") + e.what());
    }

    RunConfig c;
    if (j.contains("model")) {
        c.model = j.at("model").get<std::string>();
        if (c.model != "1d" && c.model != "2d") {
            throw std::runtime_error("config: model must be 1d or 2d, got '" + c.model +
                                     "'");
        }
    }
    if (j.contains("optimizer")) {
        c.optimizer = optimizer_rule_from_string(j.at("optimizer").get<std::string>());
    }
    if (j.contains("lr")) c.lr = j.at("lr").get<double>();
    if (j.contains("balancing")) {
        c.balancing = balancing_from_string(j.at("balancing").get<std::string>());
    }
    if (j.contains("scheduler")) c.scheduler = j.at("scheduler").get<bool>();
    if (j.contains("epochs")) c.epochs = j.at("epochs").get<int>();
    if (j.contains("grid_epochs")) c.grid_epochs = j.at("grid_epochs").get<int>();
    if (j.contains("batch_size")) c.batch_size = j.at("batch_size").get<int>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("scale_unit_interval")) {
        c.scale_unit_interval = j.at("scale_unit_interval").get<bool>();
    }
    if (j.contains("dictionary_cutoff")) {
        c.dictionary_cutoff = j.at("dictionary_cutoff").get<double>();
    }
    if (c.lr <= 0.0) throw std::runtime_error("config: lr must be > 0");
    if (c.epochs < 0) throw std::runtime_error("config: epochs must be >= 0");
    if (c.batch_size < 1) throw std::runtime_error("config: batch_size must be >= 1");

    if (j.contains("data")) {
        const nlohmann::json& d = j.at("data");
        read_string(d, "corpus", c.corpus_path);
        read_string(d, "splits_dir", c.splits_dir);
        read_string(d, "davidson", c.davidson_path);
        read_string(d, "founta", c.founta_path);
        read_string(d, "dictionary", c.dictionary_path);
        read_string(d, "vocab", c.vocab_path);
        read_string(d, "precomputed", c.precomputed_path);
    }
    read_string(j, "output_dir", c.output_dir);

    apply_seed_override(c);
    return c;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("config: cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)),
                     std::istreambuf_iterator<char>());
    return from_json(text);
}

std::string RunConfig::to_json() const {
    nlohmann::ordered_json j;
    j["model"] = model;
    j["optimizer"] = dictnn::to_string(optimizer);
    j["lr"] = lr;
    j["balancing"] = dictnn::to_string(balancing);
    j["scheduler"] = scheduler;
    j["epochs"] = epochs;
    j["grid_epochs"] = grid_epochs;
    j["batch_size"] = batch_size;
    j["seed"] = seed;
    j["scale_unit_interval"] = scale_unit_interval;
    j["dictionary_cutoff"] = dictionary_cutoff;
    j["data"] = {{"corpus", corpus_path},     {"splits_dir", splits_dir},
                 {"davidson", davidson_path}, {"founta", founta_path},
                 {"dictionary", dictionary_path}, {"vocab", vocab_path},
                 {"precomputed", precomputed_path}};
    j["output_dir"] = output_dir;
    return j.dump(2);
}

void apply_seed_override(RunConfig& config) {
    const char* env = std::getenv("DICTNN_SEED");
    if (!env || !*env) return;
    std::uint64_t value = 0;
    const char* end = env;
    while (*end) ++end;
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end) {
        throw std::runtime_error(std::string("DICTNN_SEED: not an unsigned integer: '") +
                                 env + "'");
    }
    config.seed = value;
}

}  // namespace dictnn
