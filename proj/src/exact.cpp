#include "hyperfv/exact.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace hyperfv {

Integer binomial(long long a, long long b) {
    if (a < 0) {
        throw std::invalid_argument("binomial: a must be nonnegative, got " + std::to_string(a));
    }
    if (b < 0 || b > a) {
        return 0;
    }
    long long r = std::min(b, a - b);
    Integer result = 1;
    // Multiplicative form; each division is exact because the partial
    // products are themselves binomial coefficients.
    for (long long i = 1; i <= r; ++i) {
        result *= a - r + i;
        result /= i;
    }
    return result;
}

Integer multinomial(long long a, const std::vector<long long>& parts) {
    if (a < 0) {
        throw std::invalid_argument("multinomial: a must be nonnegative");
    }
    long long sum = 0;
    for (long long p : parts) {
        if (p < 0) {
            throw std::invalid_argument("multinomial: parts must be nonnegative");
        }
        sum += p;
    }
    if (sum != a) {
        throw std::invalid_argument("multinomial: parts sum to " + std::to_string(sum) +
                                    ", expected " + std::to_string(a));
    }
    Integer result = 1;
    long long remaining = a;
    for (long long p : parts) {
        result *= binomial(remaining, p);
        remaining -= p;
    }
    return result;
}

namespace {

// Rank of an integer matrix by Bareiss fraction-free elimination. Every
// division below is exact (the intermediate entries are minors of the
// original matrix), so the computation stays in Integer throughout.
int matrix_rank(std::vector<std::vector<Integer>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    Integer prev_pivot = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) std::swap(m[pivot], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t jj = c + 1; jj < cols; ++jj) {
                m[i][jj] = (m[r][c] * m[i][jj] - m[i][c] * m[r][jj]) / prev_pivot;
            }
            m[i][c] = 0;
        }
        prev_pivot = m[r][c];
        ++r;
    }
    return static_cast<int>(r);
}

} // namespace

int affine_dimension(const std::vector<std::vector<Integer>>& points) {
    if (points.empty()) {
        throw std::invalid_argument("affine_dimension: empty point list");
    }
    const std::size_t dim = points[0].size();
    for (const auto& p : points) {
        if (p.size() != dim) {
            throw std::invalid_argument("affine_dimension: points of unequal length");
        }
    }
    if (points.size() == 1) return 0;
    std::vector<std::vector<Integer>> diffs;
    diffs.reserve(points.size() - 1);
    for (std::size_t i = 1; i < points.size(); ++i) {
        std::vector<Integer> d(dim);
        for (std::size_t c = 0; c < dim; ++c) d[c] = points[i][c] - points[0][c];
        diffs.push_back(std::move(d));
    }
    return matrix_rank(std::move(diffs));
}

} // namespace hyperfv
