#include "hyperfv/chebyshev.hpp"
#include "hyperfv/face_oracle.hpp"
#include "hyperfv/formula.hpp"
#include "hyperfv/output.hpp"
#include "hyperfv/series.hpp"
#include "hyperfv/verify.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <iostream>
#include <string>

namespace {

using namespace hyperfv;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct Range {
    int lo = 0;
    int hi = 0;
};

// "3" or "2..5"
Range parse_range(const std::string& text) {
    const auto pos = text.find("..");
    try {
        if (pos == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        Range r{std::stoi(text.substr(0, pos)), std::stoi(text.substr(pos + 2))};
        if (r.lo > r.hi) throw std::invalid_argument("");
        return r;
    } catch (const std::exception&) {
        throw std::invalid_argument("malformed range '" + text + "' (expected N or LO..HI)");
    }
}

constexpr int kFormulaMaxN = 64; // keeps tables and series caps bounded

void emit(const std::vector<cli::OutputRecord>& records, const std::string& format) {
    if (format == "csv") {
        std::cout << cli::to_csv(records);
    } else if (format == "json") {
        std::cout << cli::to_json(records).dump(2) << "\n";
    } else if (format == "markdown") {
        std::cout << cli::to_markdown(records);
    } else {
        for (const auto& r : records) std::cout << cli::to_plain(r) << "\n";
    }
}

FVector fvector_by_method(const HypersimplexSpec& spec, const std::string& method) {
    if (method == "oracle") {
        return spec.half_open ? oracle::f_vector_half_open_oracle(spec.n, spec.k)
                              : oracle::f_vector_closed_oracle(spec.n, spec.k);
    }
    if (method == "series") {
        // The generating functions carry j >= 1 only; the vertex count is the
        // j = 0 special case of the formula route.
        const auto gf = spec.half_open ? series::expand_half_open_gf(spec.n)
                                       : series::expand_closed_gf(spec.n);
        FVector fv(static_cast<std::size_t>(spec.n) + 1);
        fv[0] = spec.half_open ? formula::half_open_f(spec.n, spec.k, 0)
                               : formula::closed_f(spec.n, spec.k, 0);
        for (int j = 1; j <= spec.n; ++j) {
            fv[j] = gf.coefficient(spec.k, spec.n - spec.k, j);
        }
        return fv;
    }
    return formula::f_vector(spec);
}

int cmd_fvector(int n, int k, bool half_open, const std::string& method,
                const std::string& format) {
    const HypersimplexSpec spec{n, k, half_open};
    require_valid(spec);
    cli::OutputRecord rec;
    rec.n = n;
    rec.k = k;
    rec.half_open = half_open;
    rec.method = method;
    rec.values = fvector_by_method(spec, method);
    emit({rec}, format);
    return kExitOk;
}

int cmd_table(const std::string& n_text, const std::string& k_text, const std::string& j_text,
              bool half_open, const std::string& format) {
    const Range nr = parse_range(n_text);
    if (nr.lo < 1 || nr.hi > kFormulaMaxN) {
        throw std::invalid_argument("table requires 1 <= n <= " + std::to_string(kFormulaMaxN));
    }
    const bool sum_mode = (k_text == "sum");
    if (sum_mode && !half_open) {
        throw std::invalid_argument("column sums are defined for the half-open cells; "
                                    "--k sum cannot be combined with --closed");
    }
    std::vector<cli::OutputRecord> records;
    for (int n = nr.lo; n <= nr.hi; ++n) {
        const Range jr = j_text.empty() ? Range{0, n} : parse_range(j_text);
        if (jr.lo < 0 || jr.hi > n) {
            throw std::invalid_argument("table requires 0 <= j <= n");
        }
        if (sum_mode) {
            for (int j = jr.lo; j <= jr.hi; ++j) {
                cli::OutputRecord rec;
                rec.n = n;
                rec.sum_over_k = true;
                rec.j = j;
                rec.half_open = true;
                if (j == 0) {
                    // The column-sum formula starts at j = 1; the vertex
                    // column is summed directly.
                    Integer direct = 0;
                    for (int k = 1; k <= n; ++k) direct += formula::half_open_f(n, k, 0);
                    rec.values = {direct};
                    rec.source = "direct";
                } else {
                    rec.values = {formula::cube_column_sum(n, j)};
                }
                records.push_back(std::move(rec));
            }
            continue;
        }
        const Range kr = k_text.empty() ? Range{1, n} : parse_range(k_text);
        if (kr.lo < 1 || kr.hi > n) {
            throw std::invalid_argument("table requires 1 <= k <= n");
        }
        for (int k = kr.lo; k <= kr.hi; ++k) {
            for (int j = jr.lo; j <= jr.hi; ++j) {
                cli::OutputRecord rec;
                rec.n = n;
                rec.k = k;
                rec.j = j;
                rec.half_open = half_open;
                rec.values = {half_open ? formula::half_open_f(n, k, j)
                                        : formula::closed_f(n, k, j)};
                records.push_back(std::move(rec));
            }
        }
    }
    emit(records, format);
    return kExitOk;
}

void print_group_lines(const verify::Report& report) {
    for (const auto& g : report.groups) {
        std::cout << "  " << g.name << ": " << g.checks << " checks, " << g.failures
                  << " failures\n";
    }
}

int cmd_series_check(int max_n) {
    if (max_n < 1 || max_n > kFormulaMaxN) {
        throw std::invalid_argument("series-check requires 1 <= max-n <= " +
                                    std::to_string(kFormulaMaxN));
    }
    verify::Options opt;
    opt.max_series_n = max_n;
    const auto report = verify::run_series_checks(opt);
    print_group_lines(report);
    std::cout << "series-check: " << report.summary() << "\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_verify(int max_n, int max_series_n, bool corrupt) {
    const int guard = oracle::size_guard();
    if (max_n < 1 || max_n > guard) {
        throw std::invalid_argument("verify requires 1 <= max-n <= " + std::to_string(guard) +
                                    " (the face-lattice size guard; set HYPERFV_MAX_N to raise it)");
    }
    if (max_series_n < 1 || max_series_n > kFormulaMaxN) {
        throw std::invalid_argument("verify requires 1 <= max-series-n <= " +
                                    std::to_string(kFormulaMaxN));
    }
    verify::Options opt;
    opt.max_n = max_n;
    opt.max_series_n = max_series_n;
    opt.corrupt_formula = corrupt;
    const auto report = verify::run(opt);
    print_group_lines(report);
    std::cout << "verify: " << report.summary() << "\n";
    return report.ok() ? kExitOk : kExitMismatch;
}

int cmd_chebyshev(long long ell) {
    if (ell < 4) {
        throw std::invalid_argument("chebyshev requires ell >= 4 (no valid m below that)");
    }
    bool all_equal = true;
    for (long long m = 2; 2 * m <= ell; ++m) {
        const auto rel = chebyshev::verify_relation(ell, m);
        std::cout << "m=" << m << "  j=" << (m - 1) << "  n=" << (ell - m - 1)
                  << "  |coeff|=" << rel.lhs.str() << "  column_sum=" << rel.rhs.str() << "  "
                  << (rel.equal ? "match" : "MISMATCH") << "\n";
        all_equal = all_equal && rel.equal;
    }
    return all_equal ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact f-vectors of hypersimplices and half-open hypersimplices"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"plain", "csv", "json", "markdown"};
    const std::vector<std::string> methods{"formula", "series", "oracle"};

    // fvector
    auto* fv = app.add_subcommand("fvector", "compute one f-vector");
    int fv_n = 0, fv_k = 0;
    bool fv_half_open = true, fv_closed = false;
    std::string fv_method = "formula", fv_format = "plain";
    fv->add_option("--n", fv_n, "ambient dimension")->required();
    fv->add_option("--k", fv_k, "slab level (1 <= k <= n)")->required();
    auto* fv_ho = fv->add_flag("--half-open", fv_half_open, "half-open cell (default)");
    fv->add_flag("--closed", fv_closed, "closed hypersimplex")->excludes(fv_ho);
    fv->add_option("--method", fv_method, "formula | series | oracle")
        ->check(CLI::IsMember(methods));
    fv->add_option("--format", fv_format, "plain | csv | json | markdown")
        ->check(CLI::IsMember(formats));

    // table
    auto* tb = app.add_subcommand("table", "tabulate face counts");
    std::string tb_n, tb_k, tb_j, tb_format = "csv";
    bool tb_half_open = true, tb_closed = false;
    tb->add_option("--n", tb_n, "n or range LO..HI")->required();
    tb->add_option("--k", tb_k, "k, range, or 'sum' for cube-decomposition column sums");
    tb->add_option("--j", tb_j, "face dimension or range (default 0..n)");
    auto* tb_ho = tb->add_flag("--half-open", tb_half_open, "half-open cells (default)");
    tb->add_flag("--closed", tb_closed, "closed hypersimplices")->excludes(tb_ho);
    tb->add_option("--format", tb_format, "csv | json | markdown | plain")
        ->check(CLI::IsMember(formats));

    // series-check
    auto* sc = app.add_subcommand("series-check",
                                  "verify generating-function coefficients against the formulas");
    int sc_max_n = 12;
    sc->add_option("--max-n", sc_max_n, "check all 1 <= j <= n <= max-n (default 12)");

    // verify
    auto* vf = app.add_subcommand("verify", "cross-verify formulas, series and brute force");
    int vf_max_n = 7, vf_max_series_n = 12;
    bool vf_corrupt = false;
    vf->add_option("--max-n", vf_max_n, "brute-force sweep bound (default 7)");
    vf->add_option("--max-series-n", vf_max_series_n, "formula/series sweep bound (default 12)");
    vf->add_flag("--corrupt-formula", vf_corrupt,
                 "test fixture: corrupt a formula constant so verification must fail")
        ->group("");

    // chebyshev
    auto* ch = app.add_subcommand("chebyshev",
                                  "check Chebyshev coefficients against f-vector column sums");
    long long ch_ell = 0;
    ch->add_option("--ell", ch_ell, "polynomial degree (>= 4)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (*fv) {
            return cmd_fvector(fv_n, fv_k, !fv_closed, fv_method, fv_format);
        }
        if (*tb) {
            return cmd_table(tb_n, tb_k, tb_j, !tb_closed, tb_format);
        }
        if (*sc) {
            return cmd_series_check(sc_max_n);
        }
        if (*vf) {
            return cmd_verify(vf_max_n, vf_max_series_n, vf_corrupt);
        }
        if (*ch) {
            return cmd_chebyshev(ch_ell);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
