#pragma once

#include "chebpow/dense_matrix.hpp"
#include "chebpow/families.hpp"

#include <vector>

namespace chebpow {

/// Closed-form eigen-decomposition of one structured matrix.
///
/// For family a the eigenvector matrix is K (first-kind Chebyshev rows); for adagger it is T
/// (sign-twisted second-kind rows). For anti the data describes the underlying adagger matrix,
/// which is what the anti-tridiagonal power formulas are written in terms of.
///
/// Eigenvectors keep the first component equal to 1; they are never rescaled to unit length.
struct spectral_data {
    family_spec spec;
    std::vector<complex> eigenvalues;  ///< lambda_k = a + b * nodes[k]
    std::vector<double> nodes;         ///< delta_k (family a) or psi_k (adagger)
    std::vector<double> inv_coeffs;    ///< beta_k (family a), mu_k (odd n) or eta_k (even n)
    dense_matrix vec_matrix;           ///< K or T
    dense_matrix inv_matrix;           ///< K^-1 or T^-1 from the analytic coefficients
};

/// Tolerance on ||V V^-1 - I||_max enforced by decompose().
inline constexpr double closure_tolerance = 1e-9;

[[nodiscard]] std::vector<complex> eigenvalues_a(const family_spec &spec);
[[nodiscard]] std::vector<complex> eigenvalues_adagger(const family_spec &spec);

/// delta_k = 2cos((k-1)pi/(n-1)).
[[nodiscard]] std::vector<double> nodes_a(std::size_t n);
/// psi_k = -2cos(k pi/(n+1)).
[[nodiscard]] std::vector<double> nodes_adagger(std::size_t n);

/// +1 when index mod 4 is 0 or 1, -1 when it is 2 or 3.
[[nodiscard]] constexpr int sign_r(unsigned long long index) noexcept {
    return (index % 4) < 2 ? 1 : -1;
}

/// beta_k: 1/(2n-2) at the two ends, 2/(2n-2) inside.
[[nodiscard]] std::vector<double> beta_coeffs(std::size_t n);
/// gamma_j: 1 for j = 1, 2 otherwise.
[[nodiscard]] double gamma_coeff(std::size_t j, std::size_t n) noexcept;
/// mu_k for odd n, with the three-branch node indexing.
[[nodiscard]] std::vector<double> mu_coeffs(std::size_t n);
/// eta_k = (4 - psi_k^2)/(2n+2) for even n.
[[nodiscard]] std::vector<double> eta_coeffs(std::size_t n);

[[nodiscard]] dense_matrix transform_k(const family_spec &spec);
[[nodiscard]] dense_matrix transform_t(const family_spec &spec);
[[nodiscard]] dense_matrix inv_transform_k(const family_spec &spec);
[[nodiscard]] dense_matrix inv_transform_t(const family_spec &spec);

/// Builds and closure-checks the decomposition. Throws consistency_error if
/// ||V V^-1 - I||_max >= closure_tolerance.
[[nodiscard]] spectral_data decompose(const family_spec &spec);

}  // namespace chebpow
