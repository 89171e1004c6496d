#include "chebpow/spectral.hpp"

#include "chebpow/chebyshev.hpp"
#include "chebpow/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace chebpow {

namespace {

void require_family_a(const family_spec &spec, const char *op) {
    if (spec.kind() != family::a) {
        throw invalid_spec_error{ std::string{ op } + " requires family a" };
    }
}

void require_family_adagger(const family_spec &spec, const char *op) {
    if (spec.kind() == family::a) {
        throw invalid_spec_error{ std::string{ op } + " requires family adagger or anti" };
    }
}

std::vector<complex> shift_scale(const family_spec &spec, const std::vector<double> &nodes) {
    std::vector<complex> out;
    out.reserve(nodes.size());
    for (const double d : nodes) {
        out.push_back(spec.a() + spec.b() * d);
    }
    return out;
}

}  // namespace

std::vector<double> nodes_a(const std::size_t n) {
    return a_family_nodes(static_cast<unsigned>(n)).values;
}

std::vector<double> nodes_adagger(const std::size_t n) {
    std::vector<double> psi = cheb_u_roots(static_cast<unsigned>(n)).values;
    for (double &v : psi) {
        v *= -2.0;
    }
    return psi;
}

std::vector<complex> eigenvalues_a(const family_spec &spec) {
    require_family_a(spec, "eigenvalues_a");
    return shift_scale(spec, nodes_a(spec.n()));
}

std::vector<complex> eigenvalues_adagger(const family_spec &spec) {
    require_family_adagger(spec, "eigenvalues_adagger");
    return shift_scale(spec, nodes_adagger(spec.n()));
}

std::vector<double> beta_coeffs(const std::size_t n) {
    const double base = 1.0 / (2.0 * static_cast<double>(n) - 2.0);
    std::vector<double> beta(n, 2.0 * base);
    beta.front() = base;
    beta.back() = base;
    return beta;
}

double gamma_coeff(const std::size_t j, const std::size_t /* n */) noexcept {
    return j == 1 ? 1.0 : 2.0;
}

std::vector<double> mu_coeffs(const std::size_t n) {
    if (n % 2 == 0) {
        throw invalid_spec_error{ "mu coefficients are defined for odd n only" };
    }
    const std::vector<double> psi = nodes_adagger(n);
    // 1-based node lookup
    const auto psi_at = [&](const std::size_t idx) { return psi[idx - 1]; };
    const double denom = 2.0 * static_cast<double>(n) + 2.0;
    const std::size_t mid = (n + 1) / 2;
    std::vector<double> mu(n);
    for (std::size_t k = 1; k <= n; ++k) {
        if (k < mid) {
            const double p = psi_at(mid + k);
            mu[k - 1] = p * p / denom;
        } else if (k == mid) {
            mu[k - 1] = 2.0 / static_cast<double>(n + 1);
        } else {
            const double p = psi_at(3 * (n + 1) / 2 - k);
            mu[k - 1] = p * p / denom;
        }
    }
    return mu;
}

std::vector<double> eta_coeffs(const std::size_t n) {
    if (n % 2 != 0) {
        throw invalid_spec_error{ "eta coefficients are defined for even n only" };
    }
    const std::vector<double> psi = nodes_adagger(n);
    const double denom = 2.0 * static_cast<double>(n) + 2.0;
    std::vector<double> eta(n);
    for (std::size_t k = 0; k < n; ++k) {
        eta[k] = (4.0 - psi[k] * psi[k]) / denom;
    }
    return eta;
}

dense_matrix transform_k(const family_spec &spec) {
    require_family_a(spec, "transform_k");
    const std::size_t n = spec.n();
    const std::vector<double> delta = nodes_a(n);
    dense_matrix k_mat(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> t = cheb_t_sequence(static_cast<unsigned>(n), delta[j] / 2.0);
        for (std::size_t i = 0; i < n; ++i) {
            k_mat(i, j) = t[i];
        }
        k_mat(n - 1, j) *= 0.5;
    }
    return k_mat;
}

dense_matrix transform_t(const family_spec &spec) {
    require_family_adagger(spec, "transform_t");
    const std::size_t n = spec.n();
    const std::vector<double> psi = nodes_adagger(n);
    dense_matrix t_mat(n);
    for (std::size_t j = 0; j < n; ++j) {
        const std::vector<double> u = cheb_u_sequence(static_cast<unsigned>(n), psi[j] / 2.0);
        for (std::size_t i = 0; i < n; ++i) {
            t_mat(i, j) = sign_r(i) * u[i];
        }
    }
    return t_mat;
}

dense_matrix inv_transform_k(const family_spec &spec) {
    require_family_a(spec, "inv_transform_k");
    const std::size_t n = spec.n();
    const std::vector<double> delta = nodes_a(n);
    const std::vector<double> beta = beta_coeffs(n);
    dense_matrix inv(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<double> t = cheb_t_sequence(static_cast<unsigned>(n), delta[k] / 2.0);
        for (std::size_t j = 0; j < n; ++j) {
            inv(k, j) = gamma_coeff(j + 1, n) * beta[k] * t[j];
        }
    }
    return inv;
}

dense_matrix inv_transform_t(const family_spec &spec) {
    require_family_adagger(spec, "inv_transform_t");
    const std::size_t n = spec.n();
    const std::vector<double> psi = nodes_adagger(n);
    const std::vector<double> coeff = (n % 2 == 1) ? mu_coeffs(n) : eta_coeffs(n);
    dense_matrix inv(n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::vector<double> u = cheb_u_sequence(static_cast<unsigned>(n), psi[k] / 2.0);
        for (std::size_t j = 0; j < n; ++j) {
            inv(k, j) = coeff[k] * sign_r(j) * u[j];
        }
    }
    return inv;
}

spectral_data decompose(const family_spec &spec) {
    const std::size_t n = spec.n();
    spectral_data data{ spec, {}, {}, {}, {}, {} };
    if (spec.kind() == family::a) {
        data.nodes = nodes_a(n);
        data.eigenvalues = eigenvalues_a(spec);
        data.inv_coeffs = beta_coeffs(n);
        data.vec_matrix = transform_k(spec);
        data.inv_matrix = inv_transform_k(spec);
    } else {
        data.nodes = nodes_adagger(n);
        data.eigenvalues = eigenvalues_adagger(spec);
        data.inv_coeffs = (n % 2 == 1) ? mu_coeffs(n) : eta_coeffs(n);
        data.vec_matrix = transform_t(spec);
        data.inv_matrix = inv_transform_t(spec);
    }

    const double closure = mat_max_abs_diff(mat_mul(data.vec_matrix, data.inv_matrix), dense_matrix::identity(n));
    if (!(closure < closure_tolerance)) {
        throw consistency_error{ "decompose: closed-form inverse fails closure for family " + std::string{ to_string(spec.kind()) } + ", n = " + std::to_string(n) + " (residual " + std::to_string(closure) + ")" };
    }
    return data;
}

}  // namespace chebpow
