#pragma once

#include "hyperfv/exact.hpp"
#include "hyperfv/hypersimplex.hpp"

namespace hyperfv::formula {

/// Number of j-faces of the half-open hypersimplex. j = 0 is the vertex
/// count C(n,k); for j >= 1 the all-integer summand form is evaluated.
Integer half_open_f(int n, int k, int j);

/// Same quantity by the rational route C(n+1,j+1) * sum C(n-j,s)(n-s+1)/(n+1),
/// evaluated in Rational and asserted integral. Verification path only; the
/// agreement of the two routes is itself a transcription check.
Integer half_open_f_rational_route(int n, int k, int j);

/// Number of j-faces of the closed hypersimplex: C(n,k)+C(n,k-1) at j = 0,
/// C(n+1,j+1) * sum_{s=max(0,k-j)}^{k-1} C(n-j,s) for j >= 1.
Integer closed_f(int n, int k, int j);

FVector half_open_f_vector(int n, int k);
FVector closed_f_vector(int n, int k);
FVector f_vector(const HypersimplexSpec& spec);

/// Sum over k of half_open_f(n,k,j): the j-face count of the decomposition
/// of the unit cube into half-open cells. Integer form
/// j*2^(n-j)*C(n,n-j) + j*2^(n-j-1)*C(n,n-j-1). Requires 1 <= j <= n; the
/// j = 0 column is not covered by this formula (sum f_0 directly instead).
Integer cube_column_sum(int n, int j);

/// The same column sum as j * 2^(n-j-1) * (n+j+2)/(n+1) * C(n+1,j+1),
/// evaluated in Rational (the exponent n-j-1 is -1 at j = n) and asserted
/// integral. Verification path only.
Integer cube_column_sum_rational_route(int n, int j);

/// cube_column_sum(n, j) / j with j = m-1 and n = ell-m-1; the divisibility
/// is asserted. This is the f-vector route to the Chebyshev coefficient
/// magnitude |[x^(ell-2m)] T_ell|. Requires m >= 2 and ell >= 2m.
Integer chebyshev_column_sum(long long ell, long long m);

} // namespace hyperfv::formula
