#include "chebpow/dense_matrix.hpp"

#include "chebpow/errors.hpp"
#include "chebpow/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

namespace chebpow {

namespace {

void require_same_size(const dense_matrix &lhs, const dense_matrix &rhs, const char *op) {
    if (lhs.size() != rhs.size()) {
        throw dimension_error{ std::string{ op } + ": dimension mismatch (" + std::to_string(lhs.size()) + " vs " + std::to_string(rhs.size()) + ")" };
    }
}

}  // namespace

dense_matrix::dense_matrix(const std::size_t n) :
    n_{ n }, data_(n * n) {
    if (n == 0) {
        throw dimension_error{ "dense_matrix: dimension must be at least 1" };
    }
}

dense_matrix::dense_matrix(std::initializer_list<std::initializer_list<complex>> rows) :
    dense_matrix(rows.size()) {
    std::size_t i = 0;
    for (const auto &r : rows) {
        if (r.size() != n_) {
            throw dimension_error{ "dense_matrix: ragged initializer, row " + std::to_string(i) + " has " + std::to_string(r.size()) + " entries" };
        }
        std::copy(r.begin(), r.end(), data_.begin() + static_cast<std::ptrdiff_t>(i * n_));
        ++i;
    }
}

dense_matrix dense_matrix::identity(const std::size_t n) {
    dense_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

dense_matrix dense_matrix::transpose() const {
    dense_matrix t(n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            t(j, i) = (*this)(i, j);
        }
    }
    return t;
}

dense_matrix mat_mul(const dense_matrix &lhs, const dense_matrix &rhs) {
    require_same_size(lhs, rhs, "mat_mul");
    dense_matrix out(lhs.size());
    kernels::matmul_omp(lhs, rhs, out);
    return out;
}

dense_matrix mat_pow_binary(const dense_matrix &m, unsigned long long s) {
    dense_matrix result = dense_matrix::identity(m.size());
    dense_matrix base = m;
    bool first = true;
    while (s > 0) {
        if (s & 1ULL) {
            result = first ? base : mat_mul(result, base);
            first = false;
        }
        s >>= 1U;
        if (s > 0) {
            base = mat_mul(base, base);
        }
    }
    return result;
}

dense_matrix mat_inverse(const dense_matrix &m) {
    const std::size_t n = m.size();
    double max_initial = 0.0;
    for (const complex &z : m.data()) {
        max_initial = std::max(max_initial, std::abs(z));
    }
    const double threshold = 1e-12 * max_initial;
    if (max_initial == 0.0) {
        throw singular_matrix_error{ "mat_inverse: zero matrix is singular" };
    }

    dense_matrix work = m;
    dense_matrix inv = dense_matrix::identity(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(work(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            const double v = std::abs(work(r, col));
            if (v > best) {
                best = v;
                pivot = r;
            }
        }
        if (best < threshold) {
            throw singular_matrix_error{ "mat_inverse: matrix is singular (pivot modulus " + std::to_string(best) + " in column " + std::to_string(col + 1) + ")" };
        }
        if (pivot != col) {
            std::swap_ranges(work.row(col).begin(), work.row(col).end(), work.row(pivot).begin());
            std::swap_ranges(inv.row(col).begin(), inv.row(col).end(), inv.row(pivot).begin());
        }
        const complex scale = 1.0 / work(col, col);
        for (std::size_t c = 0; c < n; ++c) {
            work(col, c) *= scale;
            inv(col, c) *= scale;
        }
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) {
                continue;
            }
            const complex factor = work(r, col);
            if (factor == complex{}) {
                continue;
            }
            for (std::size_t c = 0; c < n; ++c) {
                work(r, c) -= factor * work(col, c);
                inv(r, c) -= factor * inv(col, c);
            }
        }
    }
    return inv;
}

complex mat_determinant(const dense_matrix &m) {
    const std::size_t n = m.size();
    dense_matrix lu = m;
    complex det = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (std::size_t r = col + 1; r < n; ++r) {
            if (std::abs(lu(r, col)) > best) {
                best = std::abs(lu(r, col));
                pivot = r;
            }
        }
        if (best == 0.0) {
            return complex{};
        }
        if (pivot != col) {
            std::swap_ranges(lu.row(col).begin(), lu.row(col).end(), lu.row(pivot).begin());
            det = -det;
        }
        det *= lu(col, col);
        for (std::size_t r = col + 1; r < n; ++r) {
            const complex factor = lu(r, col) / lu(col, col);
            for (std::size_t c = col + 1; c < n; ++c) {
                lu(r, c) -= factor * lu(col, c);
            }
        }
    }
    return det;
}

double mat_norm_maxabs(const dense_matrix &m) {
    double best = 0.0;
    for (const complex &z : m.data()) {
        best = std::max(best, std::abs(z));
    }
    return best;
}

double mat_max_abs_diff(const dense_matrix &lhs, const dense_matrix &rhs) {
    require_same_size(lhs, rhs, "mat_max_abs_diff");
    double best = 0.0;
    const auto l = lhs.data();
    const auto r = rhs.data();
    for (std::size_t k = 0; k < l.size(); ++k) {
        best = std::max(best, std::abs(l[k] - r[k]));
    }
    return best;
}

bool mat_approx_eq(const dense_matrix &lhs, const dense_matrix &rhs, const double tol) {
    return mat_max_abs_diff(lhs, rhs) <= tol;
}

dense_matrix mat_pow_signed(const dense_matrix &m, const long long s) {
    if (s >= 0) {
        return mat_pow_binary(m, static_cast<unsigned long long>(s));
    }
    return mat_pow_binary(mat_inverse(m), static_cast<unsigned long long>(-(s + 1)) + 1ULL);
}

dense_matrix mat_diag(std::span<const complex> values) {
    dense_matrix d(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        d(i, i) = values[i];
    }
    return d;
}

}  // namespace chebpow
