#include "chebpow/families.hpp"

#include "chebpow/chebyshev.hpp"
#include "chebpow/errors.hpp"

#include <cmath>
#include <string>

namespace chebpow {

std::string_view to_string(const family f) noexcept {
    switch (f) {
        case family::a:
            return "a";
        case family::adagger:
            return "adagger";
        case family::anti:
            return "anti";
    }
    return "unknown";
}

std::optional<family> family_from_string(const std::string_view s) noexcept {
    if (s == "a") {
        return family::a;
    }
    if (s == "adagger") {
        return family::adagger;
    }
    if (s == "anti") {
        return family::anti;
    }
    return std::nullopt;
}

family_spec family_spec::make(const family f, const std::size_t n, const complex a, const complex b) {
    if (n == 0) {
        throw invalid_spec_error{ "dimension n must be at least 1" };
    }
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag()) || !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
        throw invalid_spec_error{ "parameters a and b must be finite" };
    }
    if (std::abs(b) == 0.0) {
        throw invalid_spec_error{ "parameter b must be nonzero" };
    }
    if (f == family::a && n < 2) {
        throw invalid_spec_error{ "family a requires n >= 2" };
    }
    if (f == family::anti && n % 2 != 0) {
        throw invalid_spec_error{ "anti-tridiagonal requires even n" };
    }
    return family_spec{ f, n, a, b };
}

family_spec family_spec::underlying() const noexcept {
    if (family_ == family::anti) {
        return family_spec{ family::adagger, n_, a_, b_ };
    }
    return *this;
}

namespace {

dense_matrix build_a(const family_spec &spec) {
    const std::size_t n = spec.n();
    dense_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = spec.a();
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        m(k, k + 1) = spec.b();
        m(k + 1, k) = spec.b();
    }
    // both doubled corners; at n = 2 they are the same entry and compound to 4b
    m(0, 1) *= 2.0;
    m(n - 2, n - 1) *= 2.0;
    return m;
}

dense_matrix build_adagger(const family_spec &spec) {
    const std::size_t n = spec.n();
    dense_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = spec.a();
    }
    // pair k couples rows k, k+1 (1-based) with sign (-1)^(k+1)
    for (std::size_t k = 1; k < n; ++k) {
        const complex v = (k % 2 == 1) ? spec.b() : -spec.b();
        m(k - 1, k) = v;
        m(k, k - 1) = v;
    }
    return m;
}

}  // namespace

dense_matrix build_matrix(const family_spec &spec) {
    switch (spec.kind()) {
        case family::a:
            return build_a(spec);
        case family::adagger:
            return build_adagger(spec);
        case family::anti: {
            // row i of J * A_dagger is row n-i+1 of A_dagger
            const dense_matrix base = build_adagger(spec);
            const std::size_t n = spec.n();
            dense_matrix m(n);
            for (std::size_t i = 0; i < n; ++i) {
                for (std::size_t j = 0; j < n; ++j) {
                    m(i, j) = base(n - 1 - i, j);
                }
            }
            return m;
        }
    }
    throw invalid_spec_error{ "unknown family" };
}

dense_matrix build_exchange(const std::size_t n) {
    dense_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, n - 1 - i) = 1.0;
    }
    return m;
}

double char_value_a(const std::size_t n, const double alpha) {
    if (n < 3) {
        throw invalid_spec_error{ "char_value_a requires n >= 3" };
    }
    return (alpha * alpha - 4.0) * p_value(static_cast<unsigned>(n - 2), alpha);
}

double char_value_adagger(const std::size_t n, const double theta) {
    if (n < 1) {
        throw invalid_spec_error{ "char_value_adagger requires n >= 1" };
    }
    return cheb_u(static_cast<unsigned>(n), theta / 2.0);
}

}  // namespace chebpow
