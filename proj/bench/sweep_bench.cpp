// Timing comparison of the serial reference sweeps against the OpenMP
// kernels. Run with POINTSCAT_THREADS=N to cap the thread count.

#include <chrono>
#include <cstdio>

#include "pointscat/sweep.hpp"

using namespace pointscat;
using clock_type = std::chrono::steady_clock;

namespace {

template <typename F>
double time_ms(F&& f, int repeats) {
    // One warm-up pass, then the best of `repeats`.
    f();
    double best = 1e300;
    for (int i = 0; i < repeats; ++i) {
        auto t0 = clock_type::now();
        f();
        auto t1 = clock_type::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

} // namespace

int main() {
    ExtensionParams p = validate_extension(2.0, -1.0, 0.3, 0.4, 0.3);
    RenormConditions conds{1.0, 0.2, 0.5};

    std::printf("threads: %d\n", sweep_threads());
    std::printf("%-28s %12s %12s %8s\n", "kernel", "serial [ms]", "parallel", "speedup");

    for (int n : {10000, 100000, 1000000}) {
        auto ks = momentum_grid(0.01, 100.0, n, true);
        double ts = time_ms([&] { scatter_sweep_serial(p, ks); }, 3);
        double tp = time_ms([&] { scatter_sweep(p, ks); }, 3);
        std::printf("scatter %-20d %12.2f %12.2f %7.2fx\n", n, ts, tp, ts / tp);
    }
    for (int n : {10000, 100000, 1000000}) {
        auto mus = momentum_grid(0.6, 1000.0, n, true);
        double ts = time_ms([&] { rgflow_sweep_serial(conds, mus, false); }, 3);
        double tp = time_ms([&] { rgflow_sweep(conds, mus, false); }, 3);
        std::printf("rgflow %-21d %12.2f %12.2f %7.2fx\n", n, ts, tp, ts / tp);
    }
    return 0;
}
