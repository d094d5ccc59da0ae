#include "hyperfv/chebyshev.hpp"

#include "hyperfv/formula.hpp"

#include <string>

namespace hyperfv::chebyshev {

ChebyshevPoly chebyshev_T(int ell) {
    if (ell < 0) throw std::invalid_argument("chebyshev_T requires ell >= 0");
    std::vector<Integer> prev{Integer(1)};     // T_0
    if (ell == 0) return {0, std::move(prev)};
    std::vector<Integer> cur{Integer(0), Integer(1)}; // T_1
    for (int d = 2; d <= ell; ++d) {
        std::vector<Integer> next(static_cast<std::size_t>(d) + 1, Integer(0));
        for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = 2 * cur[i];
        for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    return {ell, std::move(cur)};
}

Integer coefficient_closed_form(long long ell, long long m) {
    if (ell < 1 || m < 0 || 2 * m > ell) {
        throw std::invalid_argument("coefficient_closed_form requires ell >= 1 and 0 <= m <= ell/2");
    }
    // 2^(ell-2m-1) as 2^(ell-2m)/2 keeps the ell = 2m case exact.
    Rational r = Rational(ell, ell - m) * Rational(binomial(ell - m, m)) *
                 Rational(Integer(1) << (ell - 2 * m), 2);
    if (m % 2 != 0) r = -r;
    if (denominator(r) != 1) {
        throw std::logic_error("coefficient_closed_form: expected an integer, got " + r.str());
    }
    return numerator(r);
}

RelationReport verify_relation(long long ell, long long m) {
    if (m < 2 || ell < 2 * m) {
        throw std::invalid_argument("verify_relation requires m >= 2 and ell >= 2m");
    }
    const auto poly = chebyshev_T(static_cast<int>(ell));
    Integer lhs = poly.coeffs[static_cast<std::size_t>(ell - 2 * m)];
    if (lhs < 0) lhs = -lhs;
    Integer rhs = formula::chebyshev_column_sum(ell, m);
    const bool equal = lhs == rhs;
    return {std::move(lhs), std::move(rhs), equal};
}

} // namespace hyperfv::chebyshev
