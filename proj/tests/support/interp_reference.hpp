#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Brute-force endpoint-anchored linear resampling reference. Written from the
// definition (out[i] samples the polyline through (j, v[j]) at
// i*(m-1)/(n-1)) with a linear scan for the bracketing segment instead of
// index arithmetic.
namespace testref {

inline std::vector<double> resample(const std::vector<double>& v, std::size_t n) {
    const std::size_t m = v.size();
    if (n == 0) return {};
    if (m == 0) return std::vector<double>(n, 0.0);
    if (m == 1) return std::vector<double>(n, v[0]);
    if (n == 1) return {v[0]};
    std::vector<double> out;
    out.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double pos = static_cast<double>(i) *
                           static_cast<double>(m - 1) / static_cast<double>(n - 1);
        std::size_t seg = 0;
        while (seg + 2 < m && static_cast<double>(seg + 1) <= pos) ++seg;
        const double t = pos - static_cast<double>(seg);
        out.push_back(t >= 1.0 ? v[seg + 1]
                               : v[seg] * (1.0 - t) + v[seg + 1] * t);
    }
    return out;
}

}  // namespace testref
