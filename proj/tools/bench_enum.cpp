// Compares the OpenMP window-enumeration kernel (Gauss-Seidel decode)
// against the serial reference (curve-intersection decode) and checks that
// both produce the same histogram.

#include <chrono>
#include <cstdlib>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "padyn/enumerate.hpp"

using namespace padyn;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - t0)
        .count();
}

}  // namespace

int main(int argc, char** argv) {
    const long depth = argc > 1 ? std::atol(argv[1]) : 5;
    const Field F = Field::canonical(64);
    const auto [m, n] = window_depths_for(F, depth);
    long long windows = 1;
    for (int i = 0; i < m + n + 1; ++i) windows *= F.p();

#ifdef _OPENMP
    std::cout << "threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "threads: 1 (built without OpenMP)\n";
#endif
    std::cout << "depth " << depth << ": m=" << m << " n=" << n << ", " << windows
              << " windows\n";

    const auto t0 = Clock::now();
    const auto parallel = decoded_ball_histogram(F, m, n, depth);
    const double tp = seconds_since(t0);
    std::cout << "parallel sweep decode:  " << tp << " s, " << parallel.size()
              << " occupied balls\n";

    const auto t1 = Clock::now();
    const auto serial = decoded_ball_histogram_serial(F, m, n, depth);
    const double ts = seconds_since(t1);
    std::cout << "serial curve decode:    " << ts << " s, " << serial.size()
              << " occupied balls\n";

    if (parallel != serial) {
        std::cout << "MISMATCH between kernels\n";
        return 1;
    }
    std::cout << "histograms identical; speedup x" << ts / tp << "\n";
    return 0;
}
