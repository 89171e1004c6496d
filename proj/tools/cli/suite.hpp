#pragma once

#include "chebpow/dense_matrix.hpp"
#include "chebpow/families.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace chebpow::cli {

struct check_report {
    std::string name;
    std::size_t cases{ 0 };
    double worst{ 0.0 };  ///< worst residual, normalized by the check's own scale
    double threshold{ 0.0 };
    bool pass{ true };
    std::string first_failure;
};

/// Uniform in the disk |z| <= max_modulus, with |z| >= min_modulus.
[[nodiscard]] complex random_complex(std::mt19937_64 &rng, double max_modulus, double min_modulus = 0.0);

/// Randomized consistency checks: closed form vs oracle (oracle_tol scaled by 1 + ||M||^s),
/// spectral closure and reconstruction, anti-tridiagonal parity, Fibonacci identities.
[[nodiscard]] std::vector<check_report> run_suite(std::uint64_t seed, double oracle_tol);

}  // namespace chebpow::cli
