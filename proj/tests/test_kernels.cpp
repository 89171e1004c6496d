#include "chebpow/kernels.hpp"
#include "chebpow/powers.hpp"

#include "support/oracles.hpp"

#include "gtest/gtest.h"

#include <random>

#if defined(_OPENMP)
    #include <omp.h>
#endif

using chebpow::dense_matrix;
using chebpow::family;
using chebpow::family_spec;

TEST(Kernels, matmul_serial_and_omp_are_bit_identical) {
    std::mt19937_64 rng{ 51 };
    for (const std::size_t n : { 1U, 7U, 31U, 32U, 65U }) {
        const dense_matrix x = chebpow::test::random_matrix(rng, n, 2.0);
        const dense_matrix y = chebpow::test::random_matrix(rng, n, 2.0);
        dense_matrix serial(n);
        dense_matrix parallel(n);
        chebpow::kernels::matmul_serial(x, y, serial);
        chebpow::kernels::matmul_omp(x, y, parallel);
        EXPECT_EQ(serial, parallel) << n;
    }
}

TEST(Kernels, closed_form_serial_and_omp_are_bit_identical) {
    for (const family f : { family::a, family::adagger, family::anti }) {
        for (const std::size_t n : { 2U, 12U, 40U, 64U }) {
            const chebpow::spectral_data d = chebpow::decompose(family_spec::make(f, n, chebpow::complex(0.3, 0.1), chebpow::complex(0.2, -0.1)));
            for (const long long s : { -3LL, 1LL, 7LL, 64LL }) {
                const auto serial = chebpow::power_matrix(d, s, chebpow::execution::serial);
                const auto parallel = chebpow::power_matrix(d, s, chebpow::execution::parallel);
                EXPECT_EQ(serial.matrix, parallel.matrix) << chebpow::to_string(f) << " n=" << n << " s=" << s;
            }
        }
    }
}

#if defined(_OPENMP)
TEST(Kernels, result_independent_of_thread_count) {
    const chebpow::spectral_data d = chebpow::decompose(family_spec::make(family::adagger, 96, chebpow::complex(0.3, 0.1), chebpow::complex(0.2, -0.1)));
    const int saved = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = chebpow::power_matrix(d, 33);
    omp_set_num_threads(4);
    const auto four = chebpow::power_matrix(d, 33);
    omp_set_num_threads(saved);
    EXPECT_EQ(one.matrix, four.matrix);
}
#endif

TEST(Kernels, weighted_gram_small_hand_case) {
    // basis rows (1, 1) and (2, -1), weights (1, 3), no scaling
    const std::vector<double> basis{ 1.0, 1.0, 2.0, -1.0 };
    const std::vector<chebpow::complex> weights{ 1.0, 3.0 };
    const std::vector<double> ones{ 1.0, 1.0 };
    const std::vector<std::size_t> rows{ 0, 1 };
    const chebpow::kernels::gram_input in{ 2, basis, weights, ones, ones, rows };
    dense_matrix out(2);
    chebpow::kernels::weighted_gram_serial(in, out);
    EXPECT_EQ(out, (dense_matrix{ { 4.0, -1.0 }, { -1.0, 7.0 } }));
}
