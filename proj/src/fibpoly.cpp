#include "chebpow/fibpoly.hpp"

#include "chebpow/errors.hpp"
#include "chebpow/families.hpp"

#include <cmath>
#include <numbers>

namespace chebpow {

complex fib_poly_eval(const std::size_t n, const complex x) noexcept {
    if (n == 0) {
        return 0.0;
    }
    complex prev = 0.0;
    complex cur = 1.0;
    for (std::size_t m = 2; m <= n; ++m) {
        const complex next = x * cur + prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

det_pair fib_det_check(const std::size_t n, const complex x) {
    if (n < 3) {
        throw invalid_spec_error{ "determinant identity requires n >= 3" };
    }
    const family_spec spec = family_spec::make(family::a, n, x, complex{ 0.0, 1.0 });
    return det_pair{ mat_determinant(build_matrix(spec)), (x * x + 4.0) * fib_poly_eval(n - 1, x) };
}

complex fib_factor_eval(const std::size_t n, const complex x) {
    if (n < 3) {
        throw invalid_spec_error{ "factorization requires n >= 3" };
    }
    const complex two_i{ 0.0, 2.0 };
    complex product = 1.0;
    for (std::size_t k = 2; k <= n - 1; ++k) {
        product *= x + two_i * std::cos(static_cast<double>(k - 1) * std::numbers::pi / static_cast<double>(n - 1));
    }
    return product;
}

}  // namespace chebpow
