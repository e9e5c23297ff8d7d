#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "dictnn/network.hpp"

namespace dictnn {

// Checkpoints are directories holding `manifest.json` (architecture, seed,
// epoch, metrics, tensor table) and `params.bin` (all tensors, including
// batch-norm running statistics, as little-endian 32-bit reals concatenated
// in manifest order).
struct CheckpointManifest {
    std::string architecture;  // "1d" | "2d"
    std::uint64_t seed = 0;
    long epoch = -1;
    std::map<std::string, double> metrics;
};

void save_checkpoint(const std::string& dir, Network<float>& net,
                     const CheckpointManifest& manifest);

struct LoadedCheckpoint {
    CheckpointManifest manifest;
    Network<float> net;
};

LoadedCheckpoint load_checkpoint(const std::string& dir);

}  // namespace dictnn
