#pragma once

#include <cstdint>
#include <vector>

#include "dictnn/corpus.hpp"

namespace dictnn {

enum class BatchMode {
    Shuffle,          // seeded permutation per epoch, sequential batches
    WeightedSampler,  // N draws with replacement, p(record) proportional to 1/n_class
};

// Produces per-epoch batches of record indices. Deterministic: the schedule
// for (seed, epoch) never depends on previous calls.
class Batcher {
  public:
    Batcher(std::vector<Label> labels, std::size_t batch_size, BatchMode mode,
            std::uint64_t seed);

    std::vector<std::vector<std::size_t>> epoch_batches(std::size_t epoch) const;

    std::size_t batch_size() const { return batch_size_; }
    BatchMode mode() const { return mode_; }

  private:
    std::vector<Label> labels_;
    std::vector<std::vector<std::size_t>> by_class_;  // indices per present class
    std::size_t batch_size_;
    BatchMode mode_;
    std::uint64_t seed_;
};

}  // namespace dictnn
