#include "dictnn/batching.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "dictnn/rng.hpp"

namespace dictnn {

Batcher::Batcher(std::vector<Label> labels, std::size_t batch_size, BatchMode mode,
                 std::uint64_t seed)
    : labels_(std::move(labels)), batch_size_(batch_size), mode_(mode), seed_(seed) {
    if (batch_size_ == 0) throw std::runtime_error("batcher: batch size must be >= 1");
    std::vector<std::vector<std::size_t>> by_class(3);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        by_class[static_cast<std::size_t>(labels_[i])].push_back(i);
    }
    for (auto& cls : by_class) {
        if (!cls.empty()) by_class_.push_back(std::move(cls));
    }
}

std::vector<std::vector<std::size_t>> Batcher::epoch_batches(std::size_t epoch) const {
    const std::size_t n = labels_.size();
    std::vector<std::size_t> order;
    order.reserve(n);

    Rng rng(Rng::derive(seed_, epoch));
    if (mode_ == BatchMode::Shuffle) {
        order.resize(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        rng.shuffle(order);
    } else {
        // p(record) proportional to 1/n_class: uniform over present classes,
        // then uniform within the class.
        for (std::size_t draw = 0; draw < n; ++draw) {
            const auto& cls = by_class_[rng.below(by_class_.size())];
            order.push_back(cls[rng.below(cls.size())]);
        }
    }

    std::vector<std::vector<std::size_t>> batches;
    for (std::size_t start = 0; start < order.size(); start += batch_size_) {
        const std::size_t end = std::min(order.size(), start + batch_size_);
        batches.emplace_back(order.begin() + static_cast<std::ptrdiff_t>(start),
                             order.begin() + static_cast<std::ptrdiff_t>(end));
    }
    return batches;
}

}  // namespace dictnn
