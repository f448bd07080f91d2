// Benchmark: runs the family verification sweep once with the serial
// reference loop and once with the OpenMP loop, checks that both produce
// byte-identical reports, and prints the timings. --quick trims the sweep so
// the comparison can run as a smoke test.

#include <chrono>
#include <cstring>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "render.hpp"
#include "sweep.hpp"

using namespace nsg;

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--quick") == 0) {
            quick = true;
        } else {
            std::cerr << "usage: bench_sweep [--quick]\n";
            return 1;
        }
    }

    std::vector<FamilySpec> specs;
    auto append = [&specs](std::vector<FamilySpec> more) {
        for (auto& s : more) specs.push_back(std::move(s));
    };
    if (quick) {
        append(sweep_symmetric({4, 6}, {1, 2}, {1, 5}));
        append(sweep_unbounded({4, 4}, Range{5, 6}));
    } else {
        append(sweep_symmetric({4, 8}, {1, 3}, {1, 9}));
        append(sweep_almost_maximal({4, 7}, std::nullopt, std::nullopt));
        append(sweep_unbounded({4, 5}, std::nullopt));
    }

    auto timed = [&specs](bool parallel) {
        auto t0 = std::chrono::steady_clock::now();
        std::vector<DiscrepancyReport> reps = run_verifications(specs, parallel);
        auto t1 = std::chrono::steady_clock::now();
        return std::make_pair(std::chrono::duration<double>(t1 - t0).count(),
                              render_verify_text(reps));
    };

    auto [serial_s, serial_text] = timed(false);
    auto [parallel_s, parallel_text] = timed(true);

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::cout << "specs:    " << specs.size() << (quick ? " (quick)" : "")
              << "\n";
    std::cout << "serial:   " << serial_s << " s\n";
    std::cout << "parallel: " << parallel_s << " s (threads: " << threads
              << ")\n";
    if (parallel_s > 0.0)
        std::cout << "speedup:  " << serial_s / parallel_s << "x\n";

    if (serial_text != parallel_text) {
        std::cerr << "serial and parallel sweeps disagree\n";
        return 1;
    }
    std::cout << "serial and parallel outputs match\n";
    return 0;
}
