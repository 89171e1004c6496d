#include "chebpow/powers.hpp"

#include "chebpow/chebyshev.hpp"
#include "chebpow/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

namespace chebpow {

std::string_view to_string(const power_path p) noexcept {
    switch (p) {
        case power_path::closed_form_a:
            return "closed-form-A";
        case power_path::closed_form_adagger_odd:
            return "closed-form-ADagger-odd";
        case power_path::closed_form_adagger_even:
            return "closed-form-ADagger-even";
        case power_path::closed_form_anti_odd_s:
            return "closed-form-anti-odd-s";
        case power_path::closed_form_anti_even_s:
            return "closed-form-anti-even-s";
        case power_path::oracle:
            return "oracle";
    }
    return "unknown";
}

complex complex_ipow(const complex lambda, const long long s) noexcept {
    complex base = lambda;
    unsigned long long e = 0;
    if (s < 0) {
        base = 1.0 / lambda;
        e = static_cast<unsigned long long>(-(s + 1)) + 1ULL;
    } else {
        e = static_cast<unsigned long long>(s);
    }
    complex result = 1.0;
    while (e > 0) {
        if (e & 1ULL) {
            result *= base;
        }
        e >>= 1U;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

void require_invertible(const spectral_data &data, const long long s) {
    if (s >= 0) {
        return;
    }
    double largest = 0.0;
    for (const complex &l : data.eigenvalues) {
        largest = std::max(largest, std::abs(l));
    }
    for (std::size_t k = 0; k < data.eigenvalues.size(); ++k) {
        if (std::abs(data.eigenvalues[k]) <= 1e-12 * largest) {
            throw singular_matrix_error{ "negative power of a singular matrix: eigenvalue " + std::to_string(k + 1) + " is zero" };
        }
    }
}

namespace {

void require_index(const spectral_data &data, const std::size_t i, const std::size_t j) {
    const std::size_t n = data.spec.n();
    if (i < 1 || i > n || j < 1 || j > n) {
        throw dimension_error{ "entry index (" + std::to_string(i) + ", " + std::to_string(j) + ") out of range for n = " + std::to_string(n) };
    }
}

std::vector<complex> eigen_powers(const spectral_data &data, const long long s) {
    std::vector<complex> out(data.eigenvalues.size());
    std::transform(data.eigenvalues.begin(), data.eigenvalues.end(), out.begin(), [s](const complex l) { return complex_ipow(l, s); });
    return out;
}

power_path path_for(const family_spec &spec, const long long s) noexcept {
    switch (spec.kind()) {
        case family::a:
            return power_path::closed_form_a;
        case family::adagger:
            return spec.n() % 2 == 1 ? power_path::closed_form_adagger_odd : power_path::closed_form_adagger_even;
        case family::anti:
            return (s % 2 != 0) ? power_path::closed_form_anti_odd_s : power_path::closed_form_anti_even_s;
    }
    return power_path::oracle;
}

}  // namespace

complex power_entry_a(const spectral_data &data, const long long s, const std::size_t i, const std::size_t j) {
    if (data.spec.kind() != family::a) {
        throw invalid_spec_error{ "power_entry_a requires family a" };
    }
    require_index(data, i, j);
    require_invertible(data, s);
    const std::size_t n = data.spec.n();
    complex sum{};
    for (std::size_t k = 0; k < n; ++k) {
        const double x = data.nodes[k] / 2.0;
        sum += complex_ipow(data.eigenvalues[k], s) * (data.inv_coeffs[k] * cheb_t(static_cast<unsigned>(i - 1), x) * cheb_t(static_cast<unsigned>(j - 1), x));
    }
    const double prefactor = (i == n) ? gamma_coeff(j, n) / 2.0 : gamma_coeff(j, n);
    return prefactor * sum;
}

complex power_entry_adagger(const spectral_data &data, const long long s, const std::size_t i, const std::size_t j) {
    if (data.spec.kind() == family::a) {
        throw invalid_spec_error{ "power_entry_adagger requires family adagger" };
    }
    require_index(data, i, j);
    require_invertible(data, s);
    const std::size_t n = data.spec.n();
    const double signs = sign_r(i - 1) * sign_r(j - 1);
    complex sum{};
    for (std::size_t k = 0; k < n; ++k) {
        const double x = data.nodes[k] / 2.0;
        sum += complex_ipow(data.eigenvalues[k], s) * (data.inv_coeffs[k] * signs * cheb_u(static_cast<unsigned>(i - 1), x) * cheb_u(static_cast<unsigned>(j - 1), x));
    }
    return sum;
}

complex power_entry_anti(const spectral_data &data, const long long s, const std::size_t i, const std::size_t j) {
    if (data.spec.n() % 2 != 0) {
        throw invalid_spec_error{ "anti-tridiagonal requires even n" };
    }
    if (s % 2 != 0) {
        require_index(data, i, j);
        return power_entry_adagger(data, s, data.spec.n() - i + 1, j);
    }
    return power_entry_adagger(data, s, i, j);
}

bool in_stated_exponent_domain(const family_spec &spec, const long long s) noexcept {
    return s >= 0 || spec.n() % 2 == 0;
}

power_result power_matrix(const spectral_data &data, const long long s, const execution exec) {
    const family_spec &spec = data.spec;
    const std::size_t n = spec.n();
    power_result result{ spec, s, dense_matrix::identity(n), path_for(spec, s), std::nullopt, {} };
    if (!in_stated_exponent_domain(spec, s)) {
        result.notes.emplace_back("negative exponent with odd n lies outside the originally stated exponent domain; computed because every eigenvalue is nonzero");
    }
    if (s == 0) {
        return result;
    }
    require_invertible(data, s);

    const bool first_kind = spec.kind() == family::a;
    std::vector<double> basis(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const double x = data.nodes[k] / 2.0;
        const std::vector<double> seq = first_kind ? cheb_t_sequence(static_cast<unsigned>(n), x) : cheb_u_sequence(static_cast<unsigned>(n), x);
        for (std::size_t d = 0; d < n; ++d) {
            basis[d * n + k] = first_kind ? seq[d] : sign_r(d) * seq[d];
        }
    }

    std::vector<complex> weights = eigen_powers(data, s);
    for (std::size_t k = 0; k < n; ++k) {
        weights[k] *= data.inv_coeffs[k];
    }

    std::vector<double> row_scale(n, 1.0);
    std::vector<double> col_scale(n, 1.0);
    if (first_kind) {
        row_scale[n - 1] = 0.5;
        for (std::size_t j = 0; j < n; ++j) {
            col_scale[j] = gamma_coeff(j + 1, n);
        }
    }

    std::vector<std::size_t> row_index(n);
    std::iota(row_index.begin(), row_index.end(), std::size_t{ 0 });
    if (result.path == power_path::closed_form_anti_odd_s) {
        std::reverse(row_index.begin(), row_index.end());
    }

    const kernels::gram_input in{ n, basis, weights, row_scale, col_scale, row_index };
    if (exec == execution::parallel) {
        kernels::weighted_gram_omp(in, result.matrix);
    } else {
        kernels::weighted_gram_serial(in, result.matrix);
    }
    return result;
}

power_result power_matrix(const family_spec &spec, const long long s, const execution exec) {
    return power_matrix(decompose(spec), s, exec);
}

power_result power_oracle(const family_spec &spec, const long long s) {
    dense_matrix m = build_matrix(spec);
    return power_result{ spec, s, mat_pow_signed(m, s), power_path::oracle, std::nullopt, {} };
}

power_result power_verify(const family_spec &spec, const long long s, const double tol) {
    power_result closed = power_matrix(spec, s);
    const power_result oracle = power_oracle(spec, s);
    const double residual = mat_max_abs_diff(closed.matrix, oracle.matrix);
    closed.residual_vs_oracle = residual;
    if (!(residual <= tol)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << "closed form disagrees with oracle: family=" << to_string(spec.kind()) << " n=" << spec.n()
            << " a=" << spec.a() << " b=" << spec.b() << " s=" << s << " residual=" << residual << " tol=" << tol;
        throw verification_error{ msg.str(), closed.matrix, oracle.matrix, residual };
    }
    return closed;
}

}  // namespace chebpow
