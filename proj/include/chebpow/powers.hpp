#pragma once

#include "chebpow/dense_matrix.hpp"
#include "chebpow/errors.hpp"
#include "chebpow/families.hpp"
#include "chebpow/spectral.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chebpow {

enum class power_path {
    closed_form_a,
    closed_form_adagger_odd,
    closed_form_adagger_even,
    closed_form_anti_odd_s,
    closed_form_anti_even_s,
    oracle,
};

[[nodiscard]] std::string_view to_string(power_path p) noexcept;

enum class execution { serial, parallel };

struct power_result {
    family_spec spec;
    long long exponent;
    dense_matrix matrix;
    power_path path;
    std::optional<double> residual_vs_oracle;
    /// Informational diagnostics, e.g. a negative exponent outside the originally stated domain.
    std::vector<std::string> notes;
};

/// Closed form and oracle disagree by more than the requested tolerance.
class verification_error : public error {
  public:
    verification_error(const std::string &what, dense_matrix closed_form, dense_matrix oracle, double residual) :
        error{ what }, closed_form_{ std::move(closed_form) }, oracle_{ std::move(oracle) }, residual_{ residual } {}

    [[nodiscard]] const dense_matrix &closed_form() const noexcept { return closed_form_; }
    [[nodiscard]] const dense_matrix &oracle() const noexcept { return oracle_; }
    [[nodiscard]] double residual() const noexcept { return residual_; }

  private:
    dense_matrix closed_form_;
    dense_matrix oracle_;
    double residual_;
};

/// lambda^s by repeated squaring; negative s inverts first. Integer exponents only.
[[nodiscard]] complex complex_ipow(complex lambda, long long s) noexcept;

/// Throws singular_matrix_error if s < 0 and some |lambda_k| <= 1e-12 * max |lambda|.
void require_invertible(const spectral_data &data, long long s);

// Single entries, 1-based (i, j). Each call evaluates its Chebyshev factors directly.

/// (i, j) entry of A^s; the last row carries the extra factor 1/2.
[[nodiscard]] complex power_entry_a(const spectral_data &data, long long s, std::size_t i, std::size_t j);

/// (i, j) entry of (A_dagger)^s; mu coefficients for odd n, eta for even n.
[[nodiscard]] complex power_entry_adagger(const spectral_data &data, long long s, std::size_t i, std::size_t j);

/// (i, j) entry of the anti-tridiagonal power. For odd s the row index is exchange-flipped.
/// Throws invalid_spec_error for odd n.
[[nodiscard]] complex power_entry_anti(const spectral_data &data, long long s, std::size_t i, std::size_t j);

/// Full closed-form power; s = 0 short-circuits to the identity.
[[nodiscard]] power_result power_matrix(const spectral_data &data, long long s, execution exec = execution::parallel);
[[nodiscard]] power_result power_matrix(const family_spec &spec, long long s, execution exec = execution::parallel);

/// Brute-force power of build_matrix(spec): binary exponentiation, through mat_inverse for s < 0.
[[nodiscard]] power_result power_oracle(const family_spec &spec, long long s);

/// Closed form checked against the oracle; throws verification_error when the max-abs residual exceeds tol.
[[nodiscard]] power_result power_verify(const family_spec &spec, long long s, double tol);

/// True when (family, n, s) lies inside the exponent domain the closed forms were originally stated for.
[[nodiscard]] bool in_stated_exponent_domain(const family_spec &spec, long long s) noexcept;

}  // namespace chebpow
