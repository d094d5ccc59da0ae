#pragma once

#include "hyperfv/exact.hpp"

#include <vector>

namespace hyperfv::chebyshev {

/// Chebyshev polynomial of the first kind, exact integer coefficients:
/// coeffs[d] is the coefficient of x^d, coeffs.size() == ell + 1.
struct ChebyshevPoly {
    int ell = 0;
    std::vector<Integer> coeffs;
};

/// T_0 = 1, T_1 = x, T_ell = 2x T_(ell-1) - T_(ell-2). The recurrence is the
/// primary route; the closed form below is verification-only so the identity
/// under test is never assumed by the code that tests it.
ChebyshevPoly chebyshev_T(int ell);

/// Coefficient of x^(ell-2m) in T_ell via
/// (-1)^m * ell/(ell-m) * C(ell-m, m) * 2^(ell-2m-1), evaluated in Rational
/// (the power is 2^-1 at ell = 2m) and asserted integral.
/// Requires ell >= 1 and 0 <= m <= ell/2.
Integer coefficient_closed_form(long long ell, long long m);

struct RelationReport {
    Integer lhs; // |coefficient of x^(ell-2m) in T_ell|, recurrence route
    Integer rhs; // scaled cube column sum, f-vector route
    bool equal = false;
};

/// Checks |[x^(ell-2m)] T_ell| against formula::chebyshev_column_sum(ell, m).
/// Requires m >= 2 and ell >= 2m.
RelationReport verify_relation(long long ell, long long m);

} // namespace hyperfv::chebyshev
