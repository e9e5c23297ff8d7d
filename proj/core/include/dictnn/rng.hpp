#pragma once

#include <cstdint>
#include <vector>

namespace dictnn {

// Deterministic generator used everywhere randomness matters (weight init,
// shuffles, samplers). std:: distributions are implementation-defined, so all
// value derivation is done here by hand: the same seed yields the same stream
// on every platform and compiler.
class Rng {
public:
    explicit Rng(std::uint64_t seed);

    std::uint64_t next_u64();

    // [0, 1)
    double uniform();
    double uniform(double lo, double hi);
    float uniform_float(float lo, float hi);

    // Unbiased draw from [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound);

    // Fisher-Yates, driven by below().
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(v[i - 1], v[j]);
        }
    }

    // Derives an independent stream seed from (base, stream).
    static std::uint64_t derive(std::uint64_t base, std::uint64_t stream);

private:
    std::uint64_t state_[4];
};

}  // namespace dictnn
