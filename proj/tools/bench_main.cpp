#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ifd/batch.hpp"
#include "ifd/problem_spec.hpp"

namespace {

template <class Fn>
double seconds(Fn&& fn) {
    double best = 1e300;
    for (int rep = 0; rep < 3; ++rep) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

bool bit_identical(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct Row {
    const char* kernel;
    std::size_t n;
    double serial_s;
    double parallel_s;
    bool identical;
};

void print_row(const Row& r) {
    std::printf("%-16s %10zu %12.4f %12.4f %9.2fx   %s\n", r.kernel, r.n, r.serial_s,
                r.parallel_s, r.serial_s / r.parallel_s,
                r.identical ? "identical" : "MISMATCH");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled (serial build)\n\n");
#endif

    const ifd::ImplicitDensity d = ifd::build_density(ifd::builtin_example(1));
    std::printf("%-16s %10s %12s %12s %10s   %s\n", "kernel", "n", "serial [s]",
                "parallel [s]", "speedup", "outputs");

    bool all_identical = true;

    {
        const std::size_t n = 2'000'000;
        const std::vector<double> ts = ifd::linspace(-2.0, 2.0, n);
        std::vector<double> a, b;
        const double ts_serial = seconds([&] { a = ifd::density_series_serial(d, ts); });
        const double ts_parallel = seconds([&] { b = ifd::density_series(d, ts); });
        const Row row{"density_series", n, ts_serial, ts_parallel, bit_identical(a, b)};
        all_identical = all_identical && row.identical;
        print_row(row);
    }
    {
        const std::size_t n = 2'000'000;
        const std::vector<double> ts = ifd::linspace(-2.0, 2.0, n);
        std::vector<double> a, b;
        const double ts_serial = seconds([&] { a = ifd::cdf_series_serial(d, ts); });
        const double ts_parallel = seconds([&] { b = ifd::cdf_series(d, ts); });
        const Row row{"cdf_series", n, ts_serial, ts_parallel, bit_identical(a, b)};
        all_identical = all_identical && row.identical;
        print_row(row);
    }
    {
        const std::size_t n = 200'000;
        std::vector<double> a, b;
        const double ts_serial = seconds([&] { a = ifd::sample_batch_serial(d, n, 42); });
        const double ts_parallel = seconds([&] { b = ifd::sample_batch(d, n, 42); });
        const Row row{"sample_batch", n, ts_serial, ts_parallel, bit_identical(a, b)};
        all_identical = all_identical && row.identical;
        print_row(row);
    }

    if (!all_identical) {
        std::fprintf(stderr, "parallel kernels diverged from the serial reference\n");
        return 1;
    }
    return 0;
}
