#include "chebpow/kernels.hpp"

#include <cstddef>

#if defined(_OPENMP)
    #include <omp.h>
#endif

namespace chebpow::kernels {

namespace {

inline void matmul_row(const dense_matrix &lhs, const dense_matrix &rhs, dense_matrix &out, const std::size_t i) {
    const std::size_t n = lhs.size();
    for (std::size_t j = 0; j < n; ++j) {
        complex acc{};
        for (std::size_t k = 0; k < n; ++k) {
            acc += lhs(i, k) * rhs(k, j);
        }
        out(i, j) = acc;
    }
}

inline complex gram_entry(const gram_input &in, const std::size_t i, const std::size_t j) {
    const std::size_t n = in.n;
    const double *left = in.basis.data() + in.row_index[i] * n;
    const double *right = in.basis.data() + j * n;
    complex acc{};
    for (std::size_t k = 0; k < n; ++k) {
        acc += in.weights[k] * (left[k] * right[k]);
    }
    return acc * (in.row_scale[i] * in.col_scale[j]);
}

}  // namespace

void matmul_serial(const dense_matrix &lhs, const dense_matrix &rhs, dense_matrix &out) {
    for (std::size_t i = 0; i < lhs.size(); ++i) {
        matmul_row(lhs, rhs, out, i);
    }
}

void matmul_omp(const dense_matrix &lhs, const dense_matrix &rhs, dense_matrix &out) {
    const auto n = static_cast<std::ptrdiff_t>(lhs.size());
#pragma omp parallel for schedule(static) if (n >= 32)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        matmul_row(lhs, rhs, out, static_cast<std::size_t>(i));
    }
}

void weighted_gram_serial(const gram_input &in, dense_matrix &out) {
    for (std::size_t i = 0; i < in.n; ++i) {
        for (std::size_t j = 0; j < in.n; ++j) {
            out(i, j) = gram_entry(in, i, j);
        }
    }
}

void weighted_gram_omp(const gram_input &in, dense_matrix &out) {
    const auto n = static_cast<std::ptrdiff_t>(in.n);
#pragma omp parallel for collapse(2) schedule(static) if (n >= 32)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        for (std::ptrdiff_t j = 0; j < n; ++j) {
            out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = gram_entry(in, static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
}

int max_threads() noexcept {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

}  // namespace chebpow::kernels
