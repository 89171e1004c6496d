// Serial reference vs OpenMP kernels, on the same inputs. Prints one line per
// (kernel, n) with both timings, the speedup and whether the outputs are bit-identical.

#include "chebpow/chebpow.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <vector>

namespace {

double best_seconds(const std::function<void()> &fn, const int reps) {
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
    }
    return best;
}

}  // namespace

int main(int argc, char **argv) {
    std::vector<std::size_t> sizes{ 64, 128, 256 };
    long long exponent = 64;
    int reps = 3;
    CLI::App app{ "serial vs OpenMP kernel benchmark" };
    app.add_option("--n", sizes, "comma-separated dimensions")->delimiter(',');
    app.add_option("--s", exponent, "exponent for the closed-form assembly");
    app.add_option("--reps", reps, "repetitions per measurement (best is reported)");
    CLI11_PARSE(app, argc, argv);

    using namespace chebpow;
    std::printf("threads=%d\n", kernels::max_threads());
    std::printf("%-16s %6s %14s %14s %8s %s\n", "kernel", "n", "serial_s", "omp_s", "speedup", "identical");
    for (const std::size_t n : sizes) {
        const family_spec spec = family_spec::make(family::adagger, n, complex{ 0.3, 0.1 }, complex{ 0.2, -0.1 });
        const spectral_data data = decompose(spec);

        power_result serial_out = power_matrix(data, exponent, execution::serial);
        power_result omp_out = power_matrix(data, exponent, execution::parallel);
        const double t_serial = best_seconds([&] { serial_out = power_matrix(data, exponent, execution::serial); }, reps);
        const double t_omp = best_seconds([&] { omp_out = power_matrix(data, exponent, execution::parallel); }, reps);
        std::printf("%-16s %6zu %14.6f %14.6f %8.2f %s\n", "closed_form", n, t_serial, t_omp, t_serial / t_omp, serial_out.matrix == omp_out.matrix ? "yes" : "NO");

        const dense_matrix m = build_matrix(spec);
        dense_matrix mm_serial(n);
        dense_matrix mm_omp(n);
        const double m_serial = best_seconds([&] { kernels::matmul_serial(m, m, mm_serial); }, reps);
        const double m_omp = best_seconds([&] { kernels::matmul_omp(m, m, mm_omp); }, reps);
        std::printf("%-16s %6zu %14.6f %14.6f %8.2f %s\n", "matmul", n, m_serial, m_omp, m_serial / m_omp, mm_serial == mm_omp ? "yes" : "NO");
    }
    return 0;
}
