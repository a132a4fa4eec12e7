// Runs the random sweep twice on one configuration: once through the serial
// reference path (threads = 1) and once through the OpenMP path (threads = 0),
// timing both. The reports must match case for case; a mismatch is a
// correctness bug, not a performance artifact.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "CLI11.hpp"

#include "raagpl/sweep.hpp"

namespace {

using namespace raagpl;

double run_timed(const SweepConfig& cfg, SweepReport& out) {
    const auto t0 = std::chrono::steady_clock::now();
    out = run_random_sweep(cfg);
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(t1 - t0).count();
}

bool same_report(const SweepReport& a, const SweepReport& b) {
    if (a.failures != b.failures || a.cases.size() != b.cases.size()) return false;
    for (size_t i = 0; i < a.cases.size(); ++i) {
        if (a.cases[i].index != b.cases[i].index || a.cases[i].pass != b.cases[i].pass ||
            a.cases[i].detail != b.cases[i].detail)
            return false;
    }
    return true;
}

} // namespace

int main(int argc, char** argv) {
    SweepConfig cfg;
    CLI::App app{"serial reference vs OpenMP sweep benchmark"};
    app.add_option("--cases", cfg.cases, "number of cases");
    app.add_option("--seed", cfg.seed, "random seed");
    app.add_option("--max-vertices", cfg.max_vertices, "largest graph size");
    app.add_option("--max-length", cfg.max_length, "longest sampled word");
    CLI11_PARSE(app, argc, argv);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    SweepConfig serial = cfg;
    serial.threads = 1;
    SweepConfig parallel = cfg;
    parallel.threads = 0;

    SweepReport serial_report;
    SweepReport parallel_report;
    const double serial_time = run_timed(serial, serial_report);
    const double parallel_time = run_timed(parallel, parallel_report);

    std::printf("cases %d, seed %llu, max vertices %d, max length %d\n", cfg.cases,
                static_cast<unsigned long long>(cfg.seed), cfg.max_vertices, cfg.max_length);
    std::printf("%-18s %10s %10s\n", "path", "time [s]", "failures");
    std::printf("%-18s %10.3f %10d\n", "serial reference", serial_time, serial_report.failures);
    std::printf("%-18s %10.3f %10d   (%d thread%s)\n", "openmp", parallel_time,
                parallel_report.failures, threads, threads == 1 ? "" : "s");
    std::printf("speedup %.2fx\n", serial_time / std::max(parallel_time, 1e-9));

    if (!same_report(serial_report, parallel_report)) {
        std::cerr << "reports differ between the serial and OpenMP paths\n";
        return 1;
    }
    if (serial_report.failures != 0) {
        std::cerr << serial_report.summary() << "\n";
        return 1;
    }
    std::puts("reports identical");
    return 0;
}
