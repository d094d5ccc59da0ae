#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace hyperfv {

/// Arbitrary-precision signed integer. All face counts, binomial values and
/// series coefficients in this library are exact; nothing is computed in
/// floating point.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational, always in lowest terms with positive denominator.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when a request exceeds a configured resource guard (e.g. the
/// face-lattice size guard or a series degree cap).
class ResourceLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// C(a, b) with the zero-extension convention: returns 0 for b < 0 or b > a.
/// Formula code relies on this to over-run summation limits safely.
/// Requires a >= 0.
Integer binomial(long long a, long long b);

/// a! / (parts[0]! * parts[1]! * ...). The parts must be nonnegative and sum
/// to a, otherwise std::invalid_argument is thrown.
Integer multinomial(long long a, const std::vector<long long>& parts);

/// Affine dimension of a point configuration: the exact rank of the
/// difference vectors {p_i - p_0}, computed by fraction-free (Bareiss)
/// elimination over Integer. A single point has dimension 0.
/// Throws std::invalid_argument on an empty list or ragged coordinates.
int affine_dimension(const std::vector<std::vector<Integer>>& points);

} // namespace hyperfv
