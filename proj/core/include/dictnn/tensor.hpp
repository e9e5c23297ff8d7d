#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dictnn {

// Dense row-major tensor. Rank >= 1 everywhere in this library.
template <typename T>
struct Tensor {
    std::vector<std::size_t> shape;
    std::vector<T> data;

    Tensor() = default;
    explicit Tensor(std::vector<std::size_t> s) : shape(std::move(s)) {
        std::size_t n = 1;
        for (std::size_t e : shape) n *= e;
        data.assign(n, T(0));
    }

    std::size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
    T* ptr() { return data.data(); }
    const T* ptr() const { return data.data(); }

    std::size_t extent(std::size_t dim) const { return shape[dim]; }
};

inline std::string shape_to_string(const std::vector<std::size_t>& s) {
    std::string out = "(";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(s[i]);
    }
    out += ")";
    return out;
}

}  // namespace dictnn
