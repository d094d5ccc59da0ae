#pragma once

#include "hyperfv/exact.hpp"

#include <vector>

namespace hyperfv {

/// Identifies one polytope of the family: the slice of the unit n-cube where
/// the coordinate sum lies in [k-1, k] (closed) or (k-1, k] (half-open).
struct HypersimplexSpec {
    int n = 0;
    int k = 0;
    bool half_open = true;

    bool valid() const { return n >= 1 && k >= 1 && k <= n; }
};

inline void require_valid(const HypersimplexSpec& s) {
    if (!s.valid()) {
        throw std::invalid_argument("hypersimplex spec requires 1 <= k <= n, got n=" +
                                    std::to_string(s.n) + " k=" + std::to_string(s.k));
    }
}

/// Face counts indexed by dimension: entry j = number of j-faces, length n+1.
using FVector = std::vector<Integer>;

} // namespace hyperfv
