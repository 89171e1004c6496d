#pragma once

#include "chebpow/dense_matrix.hpp"

#include <cstddef>

namespace chebpow {

/// F_0 = 0, F_1 = 1, F_n = x F_{n-1} + F_{n-2}.
[[nodiscard]] complex fib_poly_eval(std::size_t n, complex x) noexcept;

struct det_pair {
    complex determinant;  ///< det of the doubled-corner matrix with a = x, b = i, via LU
    complex product;      ///< (x^2 + 4) F_{n-1}(x)
};

/// Both sides of det(A(n, x, i)) = (x^2 + 4) F_{n-1}(x). Requires n >= 3.
[[nodiscard]] det_pair fib_det_check(std::size_t n, complex x);

/// F_{n-1}(x) as prod_{k=2}^{n-1} (x + 2i cos((k-1)pi/(n-1))).
/// The k = 1 and k = n factors multiply to x^2 + 4 and are cancelled, so no division
/// happens and x = +-2i is fine. Requires n >= 3.
[[nodiscard]] complex fib_factor_eval(std::size_t n, complex x);

}  // namespace chebpow
