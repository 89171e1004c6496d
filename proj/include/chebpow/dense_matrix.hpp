#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace chebpow {

using complex = std::complex<double>;

/// Square n x n matrix of complex doubles stored row-major.
class dense_matrix {
  public:
    dense_matrix() = default;

    /// Zero matrix of dimension n (n >= 1).
    explicit dense_matrix(std::size_t n);

    /// Builds from nested rows; every row must have rows.size() entries.
    dense_matrix(std::initializer_list<std::initializer_list<complex>> rows);

    [[nodiscard]] static dense_matrix identity(std::size_t n);

    [[nodiscard]] std::size_t size() const noexcept { return n_; }

    [[nodiscard]] complex &operator()(std::size_t i, std::size_t j) noexcept { return data_[i * n_ + j]; }
    [[nodiscard]] const complex &operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * n_ + j]; }

    [[nodiscard]] std::span<complex> row(std::size_t i) noexcept { return { data_.data() + i * n_, n_ }; }
    [[nodiscard]] std::span<const complex> row(std::size_t i) const noexcept { return { data_.data() + i * n_, n_ }; }

    [[nodiscard]] std::span<const complex> data() const noexcept { return data_; }
    [[nodiscard]] std::span<complex> data() noexcept { return data_; }

    [[nodiscard]] dense_matrix transpose() const;

    friend bool operator==(const dense_matrix &, const dense_matrix &) = default;

  private:
    std::size_t n_{ 0 };
    std::vector<complex> data_;
};

// Brute-force oracle. Nothing here knows about the structured families.

[[nodiscard]] dense_matrix mat_mul(const dense_matrix &lhs, const dense_matrix &rhs);

/// m^s by exponentiation by squaring; s = 0 gives the identity.
[[nodiscard]] dense_matrix mat_pow_binary(const dense_matrix &m, unsigned long long s);

/// Gauss-Jordan inverse with partial pivoting by modulus.
/// Throws singular_matrix_error when a pivot falls below 1e-12 times the largest initial modulus.
[[nodiscard]] dense_matrix mat_inverse(const dense_matrix &m);

/// Determinant by LU factorization with partial pivoting. Returns 0 for an exactly singular matrix.
[[nodiscard]] complex mat_determinant(const dense_matrix &m);

[[nodiscard]] double mat_norm_maxabs(const dense_matrix &m);

/// max |lhs - rhs| over all entries.
[[nodiscard]] double mat_max_abs_diff(const dense_matrix &lhs, const dense_matrix &rhs);

[[nodiscard]] bool mat_approx_eq(const dense_matrix &lhs, const dense_matrix &rhs, double tol);

/// Integer power of a square matrix, negative exponents going through mat_inverse.
[[nodiscard]] dense_matrix mat_pow_signed(const dense_matrix &m, long long s);

/// Diagonal matrix from a list of values.
[[nodiscard]] dense_matrix mat_diag(std::span<const complex> values);

}  // namespace chebpow
