// Times the batch sweep kernels against their serial reference
// implementations and prints the speedup table.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "wftq/sweep.hpp"

using namespace wftq;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename F>
double timed(const F& f) {
    auto t0 = std::chrono::steady_clock::now();
    f();
    return ms_since(t0);
}

}  // namespace

int main(int argc, char** argv) {
    int n_plasticity = 100000;
    int n_roundtrip = 1500;
    uint64_t seed = 1;
    for (int i = 1; i + 1 < argc; i += 2) {
        std::string flag = argv[i];
        if (flag == "--n") n_plasticity = std::atoi(argv[i + 1]);
        else if (flag == "--n-roundtrip") n_roundtrip = std::atoi(argv[i + 1]);
        else if (flag == "--seed") seed = std::strtoull(argv[i + 1], nullptr, 10);
    }

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif
    std::printf("threads: %d\n", threads);
    std::printf("%-28s %10s %12s %12s %9s\n", "kernel", "trials", "serial ms",
                "parallel ms", "speedup");

    {
        PlasticitySweepSummary ser, par;
        double ts = timed([&] { ser = plasticity_sweep_serial(n_plasticity, seed, 1.0); });
        double tp = timed([&] { par = plasticity_sweep(n_plasticity, seed, 1.0); });
        bool same = ser.sign_failures == par.sign_failures &&
                    ser.max_sum_a_error == par.max_sum_a_error &&
                    ser.max_path_disagreement == par.max_path_disagreement;
        std::printf("%-28s %10d %12.1f %12.1f %8.2fx %s\n", "plasticity_sweep",
                    n_plasticity, ts, tp, ts / tp,
                    same ? "" : "(MISMATCH)");
    }
    for (double k : {-1.0, 0.0, 1.0}) {
        RoundTripSweepSummary ser, par;
        double ts = timed(
            [&] { ser = roundtrip_sweep_serial(Curvature{k}, n_roundtrip, seed); });
        double tp =
            timed([&] { par = roundtrip_sweep(Curvature{k}, n_roundtrip, seed); });
        bool same = ser.failures == par.failures &&
                    ser.max_position_error == par.max_position_error;
        char name[64];
        std::snprintf(name, sizeof(name), "roundtrip_sweep k=%+.0f", k);
        std::printf("%-28s %10d %12.1f %12.1f %8.2fx %s\n", name, n_roundtrip,
                    ts, tp, ts / tp, same ? "" : "(MISMATCH)");
    }
    return 0;
}
