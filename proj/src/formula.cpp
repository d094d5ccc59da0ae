#include "hyperfv/formula.hpp"

#include <string>

namespace hyperfv::formula {

namespace {

void require_nkj(int n, int k, int j) {
    require_valid(HypersimplexSpec{n, k, true});
    if (j < 0 || j > n) {
        throw std::invalid_argument("face index requires 0 <= j <= n, got j=" + std::to_string(j));
    }
}

Integer pow2(int e) { return Integer(1) << e; }

Integer integral_or_throw(const Rational& q, const char* what) {
    if (denominator(q) != 1) {
        throw std::logic_error(std::string(what) + ": expected an integer, got " +
                               q.str());
    }
    return numerator(q);
}

} // namespace

Integer half_open_f(int n, int k, int j) {
    require_nkj(n, k, j);
    if (j == 0) return binomial(n, k);
    Integer total = 0;
    for (int s = std::max(0, k - j); s <= k - 1; ++s) {
        total += binomial(n, j) * binomial(n - j, s);
        if (n - j - 1 >= 0) total += binomial(n, j + 1) * binomial(n - j - 1, s);
    }
    return total;
}

Integer half_open_f_rational_route(int n, int k, int j) {
    require_nkj(n, k, j);
    if (j == 0) return binomial(n, k);
    Rational total = 0;
    for (int s = std::max(0, k - j); s <= k - 1; ++s) {
        total += Rational(binomial(n - j, s) * (n - s + 1), n + 1);
    }
    return integral_or_throw(Rational(binomial(n + 1, j + 1)) * total,
                             "half_open_f rational route");
}

Integer closed_f(int n, int k, int j) {
    require_nkj(n, k, j);
    if (j == 0) return binomial(n, k) + binomial(n, k - 1);
    Integer sum = 0;
    for (int s = std::max(0, k - j); s <= k - 1; ++s) sum += binomial(n - j, s);
    return binomial(n + 1, j + 1) * sum;
}

FVector half_open_f_vector(int n, int k) {
    FVector fv(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) fv[j] = half_open_f(n, k, j);
    return fv;
}

FVector closed_f_vector(int n, int k) {
    FVector fv(static_cast<std::size_t>(n) + 1);
    for (int j = 0; j <= n; ++j) fv[j] = closed_f(n, k, j);
    return fv;
}

FVector f_vector(const HypersimplexSpec& spec) {
    require_valid(spec);
    return spec.half_open ? half_open_f_vector(spec.n, spec.k) : closed_f_vector(spec.n, spec.k);
}

Integer cube_column_sum(int n, int j) {
    if (n < 1 || j < 1 || j > n) {
        // The j = 0 column is a genuine boundary gap: the formula would give
        // 0 there, but the true vertex column sum is 2^n - 1.
        throw std::invalid_argument("cube_column_sum requires 1 <= j <= n, got n=" +
                                    std::to_string(n) + " j=" + std::to_string(j));
    }
    Integer total = Integer(j) * pow2(n - j) * binomial(n, n - j);
    if (n - j - 1 >= 0) total += Integer(j) * pow2(n - j - 1) * binomial(n, n - j - 1);
    return total;
}

Integer cube_column_sum_rational_route(int n, int j) {
    if (n < 1 || j < 1 || j > n) {
        throw std::invalid_argument("cube_column_sum requires 1 <= j <= n");
    }
    // 2^(n-j-1) written as 2^(n-j)/2 so the j = n case stays exact.
    Rational r = Rational(j) * Rational(pow2(n - j), 2) * Rational(n + j + 2, n + 1) *
                 Rational(binomial(n + 1, j + 1));
    return integral_or_throw(r, "cube_column_sum rational route");
}

Integer chebyshev_column_sum(long long ell, long long m) {
    if (m < 2 || ell < 2 * m) {
        throw std::invalid_argument("chebyshev_column_sum requires m >= 2 and ell >= 2m");
    }
    const int j = static_cast<int>(m - 1);
    const int n = static_cast<int>(ell - m - 1);
    Integer sum = cube_column_sum(n, j);
    if (sum % j != 0) {
        throw std::logic_error("chebyshev_column_sum: column sum not divisible by j");
    }
    return sum / j;
}

} // namespace hyperfv::formula
