#pragma once

#include "chebpow/dense_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace chebpow {

/// The three structured families.
///  - a:        tridiag with diagonal a, off-diagonals b, entries (1,2) and (n-1,n) doubled
///  - adagger:  symmetric tridiag with diagonal a and off-diagonal pairs +b, -b, +b, ...
///  - anti:     the exchange flip J * A_dagger (anti-tridiagonal), n even only
enum class family { a, adagger, anti };

[[nodiscard]] std::string_view to_string(family f) noexcept;
[[nodiscard]] std::optional<family> family_from_string(std::string_view s) noexcept;

/// Validated input for every closed-form path. Construct through make().
class family_spec {
  public:
    /// Throws invalid_spec_error naming the first violated rule.
    [[nodiscard]] static family_spec make(family f, std::size_t n, complex a, complex b);

    [[nodiscard]] family kind() const noexcept { return family_; }
    [[nodiscard]] std::size_t n() const noexcept { return n_; }
    [[nodiscard]] complex a() const noexcept { return a_; }
    [[nodiscard]] complex b() const noexcept { return b_; }

    /// The same parameters viewed as the symmetric A_dagger family (identity for a and adagger).
    [[nodiscard]] family_spec underlying() const noexcept;

    friend bool operator==(const family_spec &, const family_spec &) = default;

  private:
    family_spec(family f, std::size_t n, complex a, complex b) :
        family_{ f }, n_{ n }, a_{ a }, b_{ b } {}

    family family_;
    std::size_t n_;
    complex a_;
    complex b_;
};

[[nodiscard]] dense_matrix build_matrix(const family_spec &spec);

/// Anti-identity: ones at (i, n-i+1).
[[nodiscard]] dense_matrix build_exchange(std::size_t n);

/// Characteristic value of the normalized doubled-corner matrix: (alpha^2 - 4) P_{n-2}(alpha). Requires n >= 3.
[[nodiscard]] double char_value_a(std::size_t n, double alpha);

/// Characteristic value of the normalized alternating-sign matrix: U_n(theta / 2).
[[nodiscard]] double char_value_adagger(std::size_t n, double theta);

}  // namespace chebpow
