#include "dictnn/checkpoint.hpp"

#include <bit>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

static_assert(std::endian::native == std::endian::little,
              "params.bin is little-endian; add byte swapping for this host");

namespace dictnn {

namespace fs = std::filesystem;

constexpr int kSchemaVersion = 1;

void save_checkpoint(const std::string& dir, Network<float>& net,
                     const CheckpointManifest& manifest) {
    fs::create_directories(dir);

    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["architecture"] = manifest.architecture.empty() ? net.architecture()
                                                      : manifest.architecture;
    j["seed"] = manifest.seed;
    j["epoch"] = manifest.epoch;
    j["metrics"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : manifest.metrics) j["metrics"][k] = v;

    std::ofstream bin(fs::path(dir) / "params.bin", std::ios::binary);
    if (!bin) throw std::runtime_error("checkpoint: cannot write params.bin in " + dir);

    nlohmann::ordered_json tensors = nlohmann::ordered_json::array();
    std::size_t offset = 0;
    for (const ParamRef<float>& p : net.params()) {
        nlohmann::ordered_json t;
        t["name"] = p.name;
        t["shape"] = p.value->shape;
        t["offset"] = offset;
        t["count"] = p.value->size();
        t["trainable"] = p.trainable;
        tensors.push_back(std::move(t));
        bin.write(reinterpret_cast<const char*>(p.value->ptr()),
                  static_cast<std::streamsize>(p.value->size() * sizeof(float)));
        offset += p.value->size();
    }
    j["tensors"] = std::move(tensors);
    if (!bin) throw std::runtime_error("checkpoint: short write to params.bin in " + dir);
    bin.close();

    std::ofstream mf(fs::path(dir) / "manifest.json");
    if (!mf) throw std::runtime_error("checkpoint: cannot write manifest.json in " + dir);
    mf << j.dump(2) << '\n';
}

LoadedCheckpoint load_checkpoint(const std::string& dir) {
    std::ifstream mf(fs::path(dir) / "manifest.json");
    if (!mf) throw std::runtime_error("checkpoint: cannot open manifest.json in " + dir);
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(mf);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::runtime_error("checkpoint: bad manifest.json in " + dir + ": " +
                                 e.what());
    }
    if (j.value("schema_version", -1) != kSchemaVersion) {
        throw std::runtime_error("checkpoint: unsupported schema_version in " + dir);
    }

    CheckpointManifest manifest;
    manifest.architecture = j.at("architecture").get<std::string>();
    manifest.seed = j.at("seed").get<std::uint64_t>();
    manifest.epoch = j.at("epoch").get<long>();
    if (j.contains("metrics")) {
        for (auto& [k, v] : j.at("metrics").items()) {
            manifest.metrics[k] = v.get<double>();
        }
    }

    Network<float> net = build_model<float>(manifest.architecture, manifest.seed);
    std::vector<ParamRef<float>> params = net.params();

    std::ifstream bin(fs::path(dir) / "params.bin", std::ios::binary);
    if (!bin) throw std::runtime_error("checkpoint: cannot open params.bin in " + dir);

    for (const auto& t : j.at("tensors")) {
        const std::string name = t.at("name").get<std::string>();
        const auto shape = t.at("shape").get<std::vector<std::size_t>>();
        const auto offset = t.at("offset").get<std::size_t>();
        const auto count = t.at("count").get<std::size_t>();

        ParamRef<float>* target = nullptr;
        for (ParamRef<float>& p : params) {
            if (p.name == name) {
                target = &p;
                break;
            }
        }
        if (!target) {
            throw std::runtime_error("checkpoint: manifest tensor '" + name +
                                     "' not present in architecture " +
                                     manifest.architecture);
        }
        if (target->value->shape != shape || target->value->size() != count) {
            throw std::runtime_error("checkpoint: tensor '" + name +
                                     "' shape mismatch: expected " +
                                     shape_to_string(target->value->shape) + ", got " +
                                     shape_to_string(shape));
        }
        bin.seekg(static_cast<std::streamoff>(offset * sizeof(float)));
        bin.read(reinterpret_cast<char*>(target->value->ptr()),
                 static_cast<std::streamsize>(count * sizeof(float)));
        if (bin.gcount() != static_cast<std::streamsize>(count * sizeof(float))) {
            throw std::runtime_error("checkpoint: truncated params.bin reading '" +
                                     name + "'");
        }
    }
    return LoadedCheckpoint{std::move(manifest), std::move(net)};
}

}  // namespace dictnn
