#include "chebpow/errors.hpp"
#include "chebpow/powers.hpp"

#include "support/oracles.hpp"

#include "gtest/gtest.h"

#include <cmath>
#include <random>

using chebpow::complex;
using chebpow::dense_matrix;
using chebpow::family;
using chebpow::family_spec;

namespace {

family_spec random_spec(std::mt19937_64 &rng, const family f, const double bound = 3.0) {
    std::size_t n = 0;
    switch (f) {
        case family::a:
            n = std::uniform_int_distribution<std::size_t>(2, 12)(rng);
            break;
        case family::adagger:
            n = std::uniform_int_distribution<std::size_t>(1, 12)(rng);
            break;
        case family::anti:
            n = 2 * std::uniform_int_distribution<std::size_t>(1, 6)(rng);
            break;
    }
    return family_spec::make(f, n, chebpow::test::random_complex(rng, bound), chebpow::test::random_complex(rng, bound, 0.05));
}

double min_eigen_modulus(const chebpow::spectral_data &d) {
    double lo = INFINITY;
    for (const complex &l : d.eigenvalues) {
        lo = std::min(lo, std::abs(l));
    }
    return lo;
}

}  // namespace

TEST(ComplexIpow, matches_repeated_multiplication) {
    const complex z{ 0.7, -1.3 };
    complex acc = 1.0;
    for (long long s = 0; s <= 20; ++s) {
        EXPECT_LT(std::abs(chebpow::complex_ipow(z, s) - acc), 1e-13 * std::abs(acc));
        EXPECT_LT(std::abs(chebpow::complex_ipow(z, -s) * acc - 1.0), 1e-13);
        acc *= z;
    }
    EXPECT_EQ(chebpow::complex_ipow(z, 0), complex(1.0));
}

TEST(PowerEntryA, example_one_at_unit_parameters) {
    const chebpow::spectral_data d = chebpow::decompose(family_spec::make(family::a, 3, 1.0, 1.0));
    const double expected[3][3] = { { 7, 14, 12 }, { 7, 13, 14 }, { 3, 7, 7 } };
    for (std::size_t i = 1; i <= 3; ++i) {
        for (std::size_t j = 1; j <= 3; ++j) {
            EXPECT_LT(std::abs(chebpow::power_entry_a(d, 3, i, j) - expected[i - 1][j - 1]), 1e-12) << i << "," << j;
        }
    }
}

TEST(PowerEntryA, example_two_entry) {
    const chebpow::spectral_data d = chebpow::decompose(family_spec::make(family::a, 4, 1.0, 2.0));
    // exact value -3299/10125; the published table shows the 3-decimal rounding -0.326
    EXPECT_LT(std::abs(chebpow::power_entry_a(d, -3, 1, 1) - complex(-3299.0 / 10125.0)), 1e-13);
    EXPECT_LT(std::abs(chebpow::power_entry_a(d, -3, 1, 1) - complex(-0.326)), 5e-4);
}

TEST(PowerEntryA, last_row_prefactor) {
    std::mt19937_64 rng{ 41 };
    for (int trial = 0; trial < 20; ++trial) {
        const family_spec spec = random_spec(rng, family::a);
        const chebpow::spectral_data d = chebpow::decompose(spec);
        const std::size_t n = spec.n();
        const long long s = 1 + trial % 5;
        const dense_matrix oracle = chebpow::mat_pow_binary(chebpow::build_matrix(spec), static_cast<unsigned long long>(s));
        const double tol = 1e-10 * (1.0 + chebpow::mat_norm_maxabs(oracle));
        double worst_last = 0.0;
        for (std::size_t j = 1; j <= n; ++j) {
            worst_last = std::max(worst_last, std::abs(chebpow::power_entry_a(d, s, n, j) - oracle(n - 1, j - 1)));
        }
        EXPECT_LT(worst_last, tol) << "n=" << n << " s=" << s;
    }
}

TEST(PowerEntryAdagger, examples) {
    const chebpow::spectral_data d3 = chebpow::decompose(family_spec::make(family::adagger, 3, 2.0, 1.0));
    EXPECT_LT(std::abs(chebpow::power_entry_adagger(d3, 4, 1, 1) - complex(42.0)), 1e-12);

    const chebpow::spectral_data d4 = chebpow::decompose(family_spec::make(family::adagger, 4, 1.0, 4.0));
    const double expected[4][4] = { { 609, 528, -864, -256 }, { 528, 1473, -784, -864 }, { -864, -784, 1473, 528 }, { -256, -864, 528, 609 } };
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= 4; ++j) {
            EXPECT_LT(std::abs(chebpow::power_entry_adagger(d4, 4, i, j) - expected[i - 1][j - 1]), 1e-9);
        }
    }

    const chebpow::spectral_data d5 = chebpow::decompose(family_spec::make(family::adagger, 4, complex(0.0, 1.0), 1.0));
    EXPECT_LT(std::abs(chebpow::power_entry_adagger(d5, -5, 1, 1) - complex(0.0, 0.296)), 5e-4);
}

TEST(PowerEntryAnti, examples) {
    const chebpow::spectral_data d2 = chebpow::decompose(family_spec::make(family::anti, 2, 1.0, 2.0));
    const double sq[2][2] = { { 5, 4 }, { 4, 5 } };
    const dense_matrix first = chebpow::build_matrix(family_spec::make(family::anti, 2, 1.0, 2.0));
    for (std::size_t i = 1; i <= 2; ++i) {
        for (std::size_t j = 1; j <= 2; ++j) {
            EXPECT_LT(std::abs(chebpow::power_entry_anti(d2, 2, i, j) - sq[i - 1][j - 1]), 1e-12);
            EXPECT_LT(std::abs(chebpow::power_entry_anti(d2, 1, i, j) - first(i - 1, j - 1)), 1e-10);
        }
    }

    const family_spec spec4 = family_spec::make(family::anti, 4, 1.0, 1.0);
    const chebpow::spectral_data d4 = chebpow::decompose(spec4);
    const dense_matrix expected = chebpow::mat_mul(chebpow::build_exchange(4), chebpow::mat_pow_binary(chebpow::build_matrix(spec4.underlying()), 3));
    for (std::size_t i = 1; i <= 4; ++i) {
        for (std::size_t j = 1; j <= 4; ++j) {
            EXPECT_LT(std::abs(chebpow::power_entry_anti(d4, 3, i, j) - expected(i - 1, j - 1)), 1e-10);
        }
    }
}

TEST(PowerEntryAnti, odd_dimension_rejected) {
    const chebpow::spectral_data d = chebpow::decompose(family_spec::make(family::adagger, 5, 1.0, 1.0));
    EXPECT_THROW((void) chebpow::power_entry_anti(d, 3, 1, 1), chebpow::invalid_spec_error);
}

TEST(PowerEntry, argument_errors) {
    const chebpow::spectral_data da = chebpow::decompose(family_spec::make(family::a, 3, 1.0, 1.0));
    const chebpow::spectral_data dd = chebpow::decompose(family_spec::make(family::adagger, 3, 1.0, 1.0));
    EXPECT_THROW((void) chebpow::power_entry_a(da, 1, 0, 1), chebpow::dimension_error);
    EXPECT_THROW((void) chebpow::power_entry_a(da, 1, 1, 4), chebpow::dimension_error);
    EXPECT_THROW((void) chebpow::power_entry_a(dd, 1, 1, 1), chebpow::invalid_spec_error);
    EXPECT_THROW((void) chebpow::power_entry_adagger(da, 1, 1, 1), chebpow::invalid_spec_error);
}

TEST(PowerMatrix, negative_power_of_singular) {
    // a = 0, n = 3: the middle eigenvalue is zero
    const family_spec spec = family_spec::make(family::a, 3, 0.0, 1.0);
    EXPECT_THROW((void) chebpow::power_matrix(spec, -1), chebpow::singular_matrix_error);
    const chebpow::spectral_data d = chebpow::decompose(spec);
    EXPECT_THROW((void) chebpow::power_entry_a(d, -2, 1, 1), chebpow::singular_matrix_error);
    EXPECT_NO_THROW((void) chebpow::power_matrix(spec, 3));
}

TEST(PowerMatrix, zero_and_first_power) {
    std::mt19937_64 rng{ 42 };
    for (const family f : { family::a, family::adagger, family::anti }) {
        for (int trial = 0; trial < 5; ++trial) {
            const family_spec spec = random_spec(rng, f);
            const chebpow::power_result zero = chebpow::power_matrix(spec, 0);
            EXPECT_EQ(zero.matrix, dense_matrix::identity(spec.n()));
            EXPECT_EQ(zero.exponent, 0);
            const chebpow::power_result one = chebpow::power_matrix(spec, 1);
            EXPECT_LT(chebpow::mat_max_abs_diff(one.matrix, chebpow::build_matrix(spec)), 1e-10 * (1.0 + chebpow::mat_norm_maxabs(one.matrix)));
        }
    }
}

TEST(PowerMatrix, path_and_notes) {
    using chebpow::power_path;
    EXPECT_EQ(chebpow::power_matrix(family_spec::make(family::a, 3, 1.0, 1.0), 2).path, power_path::closed_form_a);
    EXPECT_EQ(chebpow::power_matrix(family_spec::make(family::adagger, 3, 1.0, 1.0), 2).path, power_path::closed_form_adagger_odd);
    EXPECT_EQ(chebpow::power_matrix(family_spec::make(family::adagger, 4, 1.0, 1.0), 2).path, power_path::closed_form_adagger_even);
    EXPECT_EQ(chebpow::power_matrix(family_spec::make(family::anti, 4, 1.0, 1.0), 3).path, power_path::closed_form_anti_odd_s);
    EXPECT_EQ(chebpow::power_matrix(family_spec::make(family::anti, 4, 1.0, 1.0), -2).path, power_path::closed_form_anti_even_s);
    EXPECT_EQ(chebpow::to_string(power_path::closed_form_adagger_odd), "closed-form-ADagger-odd");

    // odd n with negative s: computed, but flagged
    const chebpow::power_result odd_neg = chebpow::power_matrix(family_spec::make(family::a, 3, 5.0, 1.0), -2);
    EXPECT_EQ(odd_neg.notes.size(), 1U);
    EXPECT_TRUE(chebpow::power_matrix(family_spec::make(family::a, 4, 5.0, 1.0), -2).notes.empty());
    EXPECT_TRUE(chebpow::power_matrix(family_spec::make(family::a, 3, 5.0, 1.0), 2).notes.empty());
}

TEST(PowerMatrix, agrees_with_entry_formulas) {
    std::mt19937_64 rng{ 43 };
    for (const family f : { family::a, family::adagger, family::anti }) {
        for (int trial = 0; trial < 6; ++trial) {
            const family_spec spec = random_spec(rng, f, 1.5);
            const chebpow::spectral_data d = chebpow::decompose(spec);
            const long long s = 1 + trial;
            const dense_matrix m = chebpow::power_matrix(d, s).matrix;
            const double tol = 1e-11 * (1.0 + chebpow::mat_norm_maxabs(m));
            for (std::size_t i = 1; i <= spec.n(); ++i) {
                for (std::size_t j = 1; j <= spec.n(); ++j) {
                    complex e{};
                    switch (f) {
                        case family::a:
                            e = chebpow::power_entry_a(d, s, i, j);
                            break;
                        case family::adagger:
                            e = chebpow::power_entry_adagger(d, s, i, j);
                            break;
                        case family::anti:
                            e = chebpow::power_entry_anti(d, s, i, j);
                            break;
                    }
                    EXPECT_LT(std::abs(e - m(i - 1, j - 1)), tol);
                }
            }
        }
    }
}

TEST(PowerMatrix, oracle_equivalence) {
    std::mt19937_64 rng{ 44 };
    for (const family f : { family::a, family::adagger, family::anti }) {
        for (int trial = 0; trial < 50; ++trial) {
            const family_spec spec = random_spec(rng, f);
            const long long s = trial % 7;
            const dense_matrix m = chebpow::build_matrix(spec);
            const double tol = 1e-8 * (1.0 + std::pow(chebpow::mat_norm_maxabs(m), static_cast<double>(s)));
            const dense_matrix closed = chebpow::power_matrix(spec, s).matrix;
            EXPECT_LT(chebpow::mat_max_abs_diff(closed, chebpow::mat_pow_binary(m, static_cast<unsigned long long>(s))), tol)
                << chebpow::to_string(f) << " n=" << spec.n() << " s=" << s;
        }
    }
}

TEST(PowerMatrix, negative_power_inverts_positive_power) {
    std::mt19937_64 rng{ 45 };
    int checked = 0;
    while (checked < 60) {
        const family f = static_cast<family>(checked % 3);
        family_spec spec = random_spec(rng, f);
        if (spec.n() > 10) {
            continue;
        }
        const chebpow::spectral_data d = chebpow::decompose(spec);
        if (min_eigen_modulus(d) < 0.5) {
            continue;
        }
        const long long s = 1 + checked % 4;
        const dense_matrix prod = chebpow::mat_mul(chebpow::power_matrix(d, -s).matrix, chebpow::power_matrix(d, s).matrix);
        EXPECT_LT(chebpow::mat_max_abs_diff(prod, dense_matrix::identity(spec.n())), 1e-7) << chebpow::to_string(f) << " n=" << spec.n() << " s=" << s;
        ++checked;
    }
}

TEST(PowerMatrix, semigroup) {
    std::mt19937_64 rng{ 46 };
    for (int trial = 0; trial < 45; ++trial) {
        const family f = static_cast<family>(trial % 3);
        const family_spec spec = random_spec(rng, f, 1.0);
        const chebpow::spectral_data d = chebpow::decompose(spec);
        const long long s1 = trial % 4;
        const long long s2 = 1 + (trial / 3) % 3;
        const dense_matrix lhs = chebpow::power_matrix(d, s1 + s2).matrix;
        const dense_matrix rhs = chebpow::mat_mul(chebpow::power_matrix(d, s1).matrix, chebpow::power_matrix(d, s2).matrix);
        EXPECT_LT(chebpow::mat_max_abs_diff(lhs, rhs), 1e-7 * std::max(1.0, chebpow::mat_norm_maxabs(lhs)));
    }
}

TEST(PowerMatrix, anti_parity_law) {
    std::mt19937_64 rng{ 47 };
    for (std::size_t n = 2; n <= 12; n += 2) {
        const family_spec anti = family_spec::make(family::anti, n, chebpow::test::random_complex(rng, 1.0), chebpow::test::random_complex(rng, 1.0, 0.05));
        const chebpow::spectral_data d = chebpow::decompose(anti);
        const chebpow::spectral_data base = chebpow::decompose(anti.underlying());
        const dense_matrix j = chebpow::build_exchange(n);
        for (long long s = 0; s <= 6; ++s) {
            dense_matrix expected = chebpow::power_matrix(base, s).matrix;
            if (s % 2 != 0) {
                expected = chebpow::mat_mul(j, expected);
            }
            EXPECT_LT(chebpow::mat_max_abs_diff(chebpow::power_matrix(d, s).matrix, expected), 1e-9) << "n=" << n << " s=" << s;
        }
    }
}

TEST(PowerVerify, examples) {
    const auto r1 = chebpow::power_verify(family_spec::make(family::a, 5, complex(2.0, 1.0), complex(1.0, -1.0)), 4, 1e-8);
    ASSERT_TRUE(r1.residual_vs_oracle.has_value());
    EXPECT_LT(*r1.residual_vs_oracle, 1e-8);
    const auto r2 = chebpow::power_verify(family_spec::make(family::adagger, 7, complex(0.0, 1.0), 2.0), 3, 1e-8);
    EXPECT_LT(*r2.residual_vs_oracle, 1e-8);
    const auto r3 = chebpow::power_verify(family_spec::make(family::anti, 6, 1.0, complex(0.0, 1.0)), 5, 1e-8);
    EXPECT_LT(*r3.residual_vs_oracle, 1e-8);
}

TEST(PowerVerify, failure_carries_both_matrices) {
    const family_spec spec = family_spec::make(family::adagger, 4, 1.0, 4.0);
    try {
        (void) chebpow::power_verify(spec, 4, -1.0);
        FAIL() << "negative tolerance must fail";
    } catch (const chebpow::verification_error &e) {
        EXPECT_EQ(e.closed_form().size(), 4U);
        EXPECT_EQ(e.oracle().size(), 4U);
        EXPECT_GE(e.residual(), 0.0);
        EXPECT_NE(std::string{ e.what() }.find("family=adagger"), std::string::npos);
    }
}
