#pragma once

#include "hyperfv/exact.hpp"

#include <string>
#include <vector>

namespace hyperfv::verify {

struct Options {
    int max_n = 7;         // brute-force oracle sweep bound
    int max_series_n = 12; // formula / generating-function sweep bound
    int max_ell = 24;      // Chebyshev degree bound
    // Test fixture: adds 1 to every half-open formula value at j = 1 inside
    // this harness, so a correct build is reported as a mismatch.
    bool corrupt_formula = false;
};

struct Mismatch {
    int group = 0; // ordinal of the check group, for deterministic ordering
    std::string check;
    int n = -1;
    int k = -1; // -1 when not applicable
    int j = -1;
    std::string lhs;
    std::string rhs;
};

struct GroupResult {
    std::string name;
    long long checks = 0;
    long long failures = 0;
};

struct Report {
    std::vector<GroupResult> groups;
    std::vector<Mismatch> mismatches; // sorted by (group, n, k, j)
    long long total_checks() const;
    bool ok() const { return mismatches.empty(); }
    /// The first failing tuple with both values, or a pass summary.
    std::string summary() const;
};

/// Formula vs brute-force oracle, half-open and closed, n <= max_n.
/// Independent (n,k) instances are evaluated concurrently.
Report run_oracle_checks(const Options& opt);

/// Generating-function coefficients vs formula values, plus the univariate
/// column-sum expansion, n <= max_series_n.
Report run_series_checks(const Options& opt);

/// Structural identities on the formulas alone: golden facet counts, the two
/// evaluation routes, Euler sums, complement symmetry, column sums,
/// closed-minus-half-open difference, n <= max_series_n.
Report run_formula_checks(const Options& opt);

/// Chebyshev coefficient identity and closed-form agreement, ell <= max_ell.
Report run_chebyshev_checks(const Options& opt);

/// Brute-force cube decomposition vs column-sum formula, n <= max_n.
Report run_cube_checks(const Options& opt);

/// Everything above, in a fixed group order.
Report run(const Options& opt);

} // namespace hyperfv::verify
