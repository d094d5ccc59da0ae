#pragma once

#include "hyperfv/exact.hpp"

#include <utility>
#include <vector>

namespace hyperfv::series {

/// One monomial coefficient of a trivariate series: v * x^a y^b t^c.
struct Term3 {
    int a = 0;
    int b = 0;
    int c = 0;
    Integer v;
};

/// Truncated formal power series in x, y, t over Integer, dense over the
/// triangle a+b <= cap_n crossed with c <= cap_t. Absent monomials are 0.
/// Arithmetic is exact on every retained monomial: truncation only discards
/// monomials above the caps.
class TruncatedSeries3 {
public:
    TruncatedSeries3(int cap_n, int cap_t);

    /// Builds a polynomial; terms above the caps are truncated away.
    static TruncatedSeries3 from_terms(int cap_n, int cap_t, const std::vector<Term3>& terms);

    int cap_n() const { return cap_n_; }
    int cap_t() const { return cap_t_; }

    /// Stored coefficient of x^a y^b t^c. Exponents above the caps are an
    /// error (out_of_range): "truncated away" is distinct from "zero".
    const Integer& coefficient(int a, int b, int c) const;
    void set_coefficient(int a, int b, int c, Integer v);

    std::vector<Term3> nonzero_terms() const;

    friend bool operator==(const TruncatedSeries3&, const TruncatedSeries3&) = default;

    // Dense layout details, shared by the multiplication kernels.
    std::size_t cell_count() const { return coef_.size(); }
    const std::vector<std::pair<int, int>>& xy_pairs() const { return pairs_; }
    std::size_t index(int a, int b, int c) const;

private:
    int cap_n_;
    int cap_t_;
    std::vector<std::pair<int, int>> pairs_; // all (a,b) with a+b <= cap_n, row-major
    std::vector<Integer> coef_;
};

/// Exact truncated product, parallelized with OpenMP: each output monomial
/// gathers its convolution sum independently.
TruncatedSeries3 mul(const TruncatedSeries3& a, const TruncatedSeries3& b);

/// Serial reference multiplication with the opposite loop structure
/// (scatter over input term pairs). Kept for testing and benchmarking the
/// parallel kernel against.
TruncatedSeries3 mul_reference(const TruncatedSeries3& a, const TruncatedSeries3& b);

/// Multiplicative inverse of a series with constant coefficient exactly 1,
/// so that mul(d, inverse_unit_series(d)) == 1 on all retained monomials.
/// Coefficients are filled layer by layer in total degree; within a layer
/// they are independent and computed in parallel.
TruncatedSeries3 inverse_unit_series(const TruncatedSeries3& d);

/// Expansion of (1-x)xt / ((1-x-y)(1-x-y-xt)(1-x-y-yt)): the coefficient of
/// x^k y^(n-k) t^j is the number of j-faces of the half-open hypersimplex,
/// for 1 <= j <= n <= cap_n. Uses cap_t = cap_n.
TruncatedSeries3 expand_half_open_gf(int cap_n);

/// Expansion of xt / ((1-x-y)(1-x-y-xt)(1-x-y-yt)); coefficients are the
/// closed-hypersimplex face counts.
TruncatedSeries3 expand_closed_gf(int cap_n);

/// Truncated univariate series over Integer.
class TruncatedSeries1 {
public:
    explicit TruncatedSeries1(int cap);
    static TruncatedSeries1 from_terms(int cap, const std::vector<std::pair<int, Integer>>& terms);

    int cap() const { return cap_; }
    const Integer& coefficient(int i) const;
    void set_coefficient(int i, Integer v);

    friend bool operator==(const TruncatedSeries1&, const TruncatedSeries1&) = default;

private:
    int cap_;
    std::vector<Integer> coef_;
};

TruncatedSeries1 mul(const TruncatedSeries1& a, const TruncatedSeries1& b);
TruncatedSeries1 inverse_unit_series(const TruncatedSeries1& d);

/// Expansion of j x^j (1-x) / (1-2x)^(j+2): the coefficient of x^n is the
/// j-column sum of the cube decomposition for n >= j, and 0 below. j >= 1.
TruncatedSeries1 expand_column_sum_gf(int j, int cap);

} // namespace hyperfv::series
