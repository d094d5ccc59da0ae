#include "hyperfv/verify.hpp"

#include "hyperfv/chebyshev.hpp"
#include "hyperfv/face_oracle.hpp"
#include "hyperfv/formula.hpp"
#include "hyperfv/series.hpp"

#include <omp.h>

#include <algorithm>
#include <sstream>

namespace hyperfv::verify {

namespace {

// Group ordinals fix the order in which the first mismatch is reported.
enum Group : int {
    kGolden = 0,
    kOracleHalfOpen,
    kOracleClosed,
    kRoutes,
    kSeriesHalfOpen,
    kSeriesClosed,
    kSeriesColumnSum,
    kEuler,
    kSymmetry,
    kColumnSums,
    kDifference,
    kCubeDecomposition,
    kChebyshev,
};

class Collector {
public:
    Collector(Report& report, int group, std::string name)
        : report_(report), group_(group), name_(std::move(name)) {}

    ~Collector() {
        std::sort(local_.begin(), local_.end(), [](const Mismatch& a, const Mismatch& b) {
            return std::tie(a.group, a.n, a.k, a.j) < std::tie(b.group, b.n, b.k, b.j);
        });
        report_.groups.push_back(GroupResult{name_, checks_, static_cast<long long>(local_.size())});
        report_.mismatches.insert(report_.mismatches.end(), local_.begin(), local_.end());
    }

    void expect_equal(const Integer& lhs, const Integer& rhs, int n, int k, int j) {
        #pragma omp atomic
        ++checks_;
        if (lhs != rhs) {
            Mismatch m{group_, name_, n, k, j, lhs.str(), rhs.str()};
            #pragma omp critical(hyperfv_verify_collect)
            local_.push_back(std::move(m));
        }
    }

private:
    Report& report_;
    int group_;
    std::string name_;
    long long checks_ = 0;
    std::vector<Mismatch> local_;
};

// All (n,k) with 1 <= k <= n <= max_n.
std::vector<std::pair<int, int>> instances(int max_n) {
    std::vector<std::pair<int, int>> out;
    for (int n = 1; n <= max_n; ++n)
        for (int k = 1; k <= n; ++k) out.emplace_back(n, k);
    return out;
}

// Single access point for the half-open formula inside the harness; the
// corruption fixture hooks in here so every group sees the same bad value.
Integer eval_half_open(const Options& opt, int n, int k, int j) {
    Integer v = formula::half_open_f(n, k, j);
    if (opt.corrupt_formula && j == 1) v += 1;
    return v;
}

} // namespace

long long Report::total_checks() const {
    long long total = 0;
    for (const auto& g : groups) total += g.checks;
    return total;
}

std::string Report::summary() const {
    std::ostringstream os;
    if (ok()) {
        os << "all " << total_checks() << " checks passed";
        return os.str();
    }
    const Mismatch& m = mismatches.front();
    os << "MISMATCH in " << m.check << " at n=" << m.n;
    if (m.k >= 0) os << " k=" << m.k;
    if (m.j >= 0) os << " j=" << m.j;
    os << ": " << m.lhs << " != " << m.rhs << " (" << mismatches.size() << " mismatch"
       << (mismatches.size() == 1 ? "" : "es") << ", " << total_checks() << " checks)";
    return os.str();
}

Report run_formula_checks(const Options& opt) {
    Report report;
    const int max_n = opt.max_series_n;
    {
        Collector c(report, kGolden, "golden facet counts");
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                Integer expected;
                if (k == n) expected = n;
                else if (k == 1) expected = n + 1;
                else expected = 2 * n + 1;
                c.expect_equal(eval_half_open(opt, n, k, n - 1), expected, n, k, n - 1);
            }
        }
    }
    {
        Collector c(report, kRoutes, "integer route vs rational route");
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= n; ++k)
                for (int j = 1; j <= n; ++j)
                    c.expect_equal(formula::half_open_f(n, k, j),
                                   formula::half_open_f_rational_route(n, k, j), n, k, j);
            for (int j = 1; j <= n; ++j)
                c.expect_equal(formula::cube_column_sum(n, j),
                               formula::cube_column_sum_rational_route(n, j), n, -1, j);
        }
    }
    {
        Collector c(report, kEuler, "Euler alternating sums");
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                Integer closed = 0, half_open = 0;
                for (int j = 0; j <= n; ++j) {
                    const Integer sign = (j % 2 == 0) ? 1 : -1;
                    closed += sign * formula::closed_f(n, k, j);
                    half_open += sign * eval_half_open(opt, n, k, j);
                }
                c.expect_equal(closed, Integer(1), n, k, -1);
                c.expect_equal(half_open, Integer(0), n, k, -1);
            }
        }
    }
    {
        Collector c(report, kSymmetry, "complement symmetry of closed counts");
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k)
                for (int j = 0; j <= n; ++j)
                    c.expect_equal(formula::closed_f(n, k, j), formula::closed_f(n, n + 1 - k, j),
                                   n, k, j);
    }
    {
        Collector c(report, kColumnSums, "column sums vs formula");
        for (int n = 1; n <= max_n; ++n) {
            for (int j = 1; j <= n; ++j) {
                Integer direct = 0;
                for (int k = 1; k <= n; ++k) direct += eval_half_open(opt, n, k, j);
                c.expect_equal(direct, formula::cube_column_sum(n, j), n, -1, j);
            }
        }
    }
    {
        Collector c(report, kDifference, "closed minus half-open difference");
        for (int n = 1; n <= max_n; ++n) {
            for (int k = 1; k <= n; ++k) {
                c.expect_equal(formula::closed_f(n, k, 0) - eval_half_open(opt, n, k, 0),
                               binomial(n, k - 1), n, k, 0);
                for (int j = 1; j <= n; ++j) {
                    Integer expected = 0;
                    if (n - j - 1 >= 0) {
                        for (int s = std::max(0, k - 1 - j); s <= k - 2; ++s)
                            expected += binomial(n - j - 1, s);
                        expected *= binomial(n, j + 1);
                    }
                    c.expect_equal(formula::closed_f(n, k, j) - eval_half_open(opt, n, k, j),
                                   expected, n, k, j);
                }
            }
        }
    }
    return report;
}

Report run_oracle_checks(const Options& opt) {
    Report report;
    const auto work = instances(opt.max_n);
    const std::int64_t count = static_cast<std::int64_t>(work.size());
    {
        // Destruction order flushes `half` into the report first.
        Collector closed(report, kOracleClosed, "closed formula vs oracle");
        Collector half(report, kOracleHalfOpen, "half-open formula vs oracle");
        #pragma omp parallel for schedule(dynamic)
        for (std::int64_t i = 0; i < count; ++i) {
            const auto [n, k] = work[i];
            const FVector oracle_half = oracle::f_vector_half_open_oracle(n, k);
            const FVector oracle_closed = oracle::f_vector_closed_oracle(n, k);
            for (int j = 0; j <= n; ++j) {
                half.expect_equal(eval_half_open(opt, n, k, j), oracle_half[j], n, k, j);
                closed.expect_equal(formula::closed_f(n, k, j), oracle_closed[j], n, k, j);
            }
        }
    }
    return report;
}

Report run_series_checks(const Options& opt) {
    Report report;
    const int max_n = opt.max_series_n;
    const auto half = series::expand_half_open_gf(max_n);
    const auto closed = series::expand_closed_gf(max_n);
    {
        Collector c(report, kSeriesHalfOpen, "half-open generating function vs formula");
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                c.expect_equal(half.coefficient(k, n - k, 0), Integer(0), n, k, 0);
                for (int j = 1; j <= n; ++j)
                    c.expect_equal(half.coefficient(k, n - k, j), eval_half_open(opt, n, k, j),
                                   n, k, j);
            }
    }
    {
        Collector c(report, kSeriesClosed, "closed generating function vs formula");
        for (int n = 1; n <= max_n; ++n)
            for (int k = 1; k <= n; ++k) {
                c.expect_equal(closed.coefficient(k, n - k, 0), Integer(0), n, k, 0);
                for (int j = 1; j <= n; ++j)
                    c.expect_equal(closed.coefficient(k, n - k, j), formula::closed_f(n, k, j),
                                   n, k, j);
            }
    }
    {
        Collector c(report, kSeriesColumnSum, "column-sum generating function vs formula");
        for (int j = 1; j <= max_n; ++j) {
            const auto gf = series::expand_column_sum_gf(j, max_n);
            for (int n = 0; n <= max_n; ++n) {
                const Integer expected =
                    (n >= j) ? formula::cube_column_sum(n, j) : Integer(0);
                c.expect_equal(gf.coefficient(n), expected, n, -1, j);
            }
        }
    }
    return report;
}

Report run_cube_checks(const Options& opt) {
    Report report;
    Collector c(report, kCubeDecomposition, "cube decomposition vs column sums");
    for (int n = 1; n <= opt.max_n; ++n) {
        const FVector decomposition = oracle::cube_decomposition_f(n);
        c.expect_equal(decomposition[0], (Integer(1) << n) - 1, n, -1, 0);
        for (int j = 1; j <= n; ++j)
            c.expect_equal(decomposition[j], formula::cube_column_sum(n, j), n, -1, j);
    }
    return report;
}

Report run_chebyshev_checks(const Options& opt) {
    Report report;
    Collector c(report, kChebyshev, "Chebyshev coefficient identity");
    for (long long ell = 1; ell <= opt.max_ell; ++ell) {
        const auto poly = chebyshev::chebyshev_T(static_cast<int>(ell));
        for (long long m = 0; 2 * m <= ell; ++m) {
            c.expect_equal(poly.coeffs[static_cast<std::size_t>(ell - 2 * m)],
                           chebyshev::coefficient_closed_form(ell, m), static_cast<int>(ell), -1,
                           static_cast<int>(m));
        }
        for (long long m = 2; 2 * m <= ell; ++m) {
            const auto rel = chebyshev::verify_relation(ell, m);
            c.expect_equal(rel.lhs, rel.rhs, static_cast<int>(ell), -1, static_cast<int>(m));
        }
    }
    return report;
}

Report run(const Options& opt) {
    Report report;
    for (Report part : {run_formula_checks(opt), run_oracle_checks(opt), run_series_checks(opt),
                        run_cube_checks(opt), run_chebyshev_checks(opt)}) {
        report.groups.insert(report.groups.end(), part.groups.begin(), part.groups.end());
        report.mismatches.insert(report.mismatches.end(), part.mismatches.begin(),
                                 part.mismatches.end());
    }
    std::sort(report.mismatches.begin(), report.mismatches.end(),
              [](const Mismatch& a, const Mismatch& b) {
                  return std::tie(a.group, a.n, a.k, a.j) < std::tie(b.group, b.n, b.k, b.j);
              });
    return report;
}

} // namespace hyperfv::verify
