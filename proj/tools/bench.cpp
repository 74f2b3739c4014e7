// Benchmarks the OpenMP kernels against their serial reference
// implementations and verifies that both produce identical results.

#include <chrono>
#include <iostream>

#include "zs/digraph.hpp"
#include "zs/matroid.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace zs;
using clock_type = std::chrono::steady_clock;

namespace {

double seconds_since(clock_type::time_point start) {
    return std::chrono::duration<double>(clock_type::now() - start).count();
}

void bench_f_scan() {
    GroupSpec spec(3, 1);
    int n = 4;
    auto total = normalized_weighting_count(spec, n);
    std::cout << "== exhaustive weighting scan (p=3, k=1, n=4, " << *total << " weightings) ==\n";

    auto t0 = clock_type::now();
    auto serial = first_zero_sum_free_serial(spec, n, 0, *total);
    double serial_s = seconds_since(t0);

    t0 = clock_type::now();
    auto parallel = first_zero_sum_free_parallel(spec, n, 0, *total);
    double parallel_s = seconds_since(t0);

    std::cout << "serial:   " << serial_s << " s\n"
              << "parallel: " << parallel_s << " s (speedup " << serial_s / parallel_s << "x)\n"
              << "results identical: " << (serial == parallel ? "yes" : "NO") << "\n\n";
}

void bench_basis_trials() {
    std::cout << "== additive-basis union trials (p=3, k=3, l=6, 400 trials) ==\n";
#ifdef _OPENMP
    int max_threads = omp_get_max_threads();
    omp_set_num_threads(1);
#endif
    auto t0 = clock_type::now();
    auto serial = additive_basis_union_test(3, 3, 6, 400, 5);
    double serial_s = seconds_since(t0);
#ifdef _OPENMP
    omp_set_num_threads(max_threads);
#endif
    t0 = clock_type::now();
    auto parallel = additive_basis_union_test(3, 3, 6, 400, 5);
    double parallel_s = seconds_since(t0);

    std::cout << "serial (1 thread): " << serial_s << " s\n"
              << "parallel:          " << parallel_s << " s (speedup " << serial_s / parallel_s
              << "x)\n"
              << "results identical: "
              << (serial.full_fraction == parallel.full_fraction ? "yes" : "NO") << "\n";
}

} // namespace

int main() {
#ifdef _OPENMP
    std::cout << "OpenMP threads available: " << omp_get_max_threads() << "\n\n";
#else
    std::cout << "built without OpenMP\n\n";
#endif
    bench_f_scan();
    bench_basis_trials();
    return 0;
}
