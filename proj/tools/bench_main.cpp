#include "hyperfv/face_oracle.hpp"
#include "hyperfv/series.hpp"
#include "hyperfv/verify.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

namespace {

using namespace hyperfv;

double best_of(int reps, const std::function<void()>& fn) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

void report_row(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-34s %10.3f ms %10.3f ms %7.2fx  %s\n", name, serial_s * 1e3, parallel_s * 1e3,
                serial_s / parallel_s, equal ? "results equal" : "RESULTS DIFFER");
}

series::TruncatedSeries3 random_series(int cap, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::int64_t> dist(-(1ll << 62), 1ll << 62);
    series::TruncatedSeries3 s(cap, cap);
    for (const auto& [a, b] : s.xy_pairs()) {
        for (int c = 0; c <= cap; ++c) s.set_coefficient(a, b, c, Integer(dist(rng)));
    }
    return s;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"benchmark: serial reference kernels vs the OpenMP ones"};
    int cap = 12;
    int lattice_n = 8;
    int verify_n = 6;
    int reps = 3;
    app.add_option("--cap", cap, "series degree cap for the multiplication benchmark");
    app.add_option("--n", lattice_n, "face-lattice dimension (bounded by the size guard)");
    app.add_option("--verify-n", verify_n, "verification sweep bound");
    app.add_option("--reps", reps, "repetitions, best-of");
    CLI11_PARSE(app, argc, argv);

    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%-34s %13s %13s %8s\n", "kernel", "serial", "parallel", "speedup");

    {
        const auto a = random_series(cap, 0x5eed0001);
        const auto b = random_series(cap, 0x5eed0002);
        series::TruncatedSeries3 ref(cap, cap), par(cap, cap);
        const double ts = best_of(reps, [&] { ref = series::mul_reference(a, b); });
        const double tp = best_of(reps, [&] { par = series::mul(a, b); });
        char name[64];
        std::snprintf(name, sizeof name, "trivariate mul, cap=%d", cap);
        report_row(name, ts, tp, ref == par);
    }

    {
        const int k = (lattice_n + 1) / 2;
        std::vector<oracle::Face> ref, par;
        const double ts = best_of(reps, [&] { ref = oracle::face_lattice_serial(lattice_n, k); });
        const double tp = best_of(reps, [&] { par = oracle::face_lattice(lattice_n, k); });
        char name[64];
        std::snprintf(name, sizeof name, "face lattice, n=%d k=%d", lattice_n, k);
        report_row(name, ts, tp, ref == par);
    }

    {
        verify::Options opt;
        opt.max_n = verify_n;
        opt.max_series_n = verify_n;
        const int max_threads = omp_get_max_threads();
        bool ok_serial = false, ok_parallel = false;
        omp_set_num_threads(1);
        const double ts = best_of(reps, [&] { ok_serial = verify::run_oracle_checks(opt).ok(); });
        omp_set_num_threads(max_threads);
        const double tp = best_of(reps, [&] { ok_parallel = verify::run_oracle_checks(opt).ok(); });
        char name[64];
        std::snprintf(name, sizeof name, "oracle sweep, max_n=%d", verify_n);
        report_row(name, ts, tp, ok_serial && ok_parallel);
    }

    return 0;
}
