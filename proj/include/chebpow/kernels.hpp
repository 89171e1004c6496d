#pragma once

#include "chebpow/dense_matrix.hpp"

#include <span>

namespace chebpow::kernels {

// Every kernel comes in a serial reference flavour and an OpenMP flavour.
// Each output entry is accumulated in ascending k in both, so results are
// bit-identical regardless of thread count.

void matmul_serial(const dense_matrix &lhs, const dense_matrix &rhs, dense_matrix &out);
void matmul_omp(const dense_matrix &lhs, const dense_matrix &rhs, dense_matrix &out);

/// Weighted Gram assembly used by every closed-form power:
///
///   out(i, j) = row_scale[i] * col_scale[j] * sum_k weights[k] * basis(row_index[i], k) * basis(j, k)
///
/// basis is an n x n real table stored row-major (polynomial degree by node), row_index
/// permutes the left factor's rows (identity, or reversed for the exchange-flipped family).
struct gram_input {
    std::size_t n;
    std::span<const double> basis;
    std::span<const complex> weights;
    std::span<const double> row_scale;
    std::span<const double> col_scale;
    std::span<const std::size_t> row_index;
};

void weighted_gram_serial(const gram_input &in, dense_matrix &out);
void weighted_gram_omp(const gram_input &in, dense_matrix &out);

/// Number of threads the OpenMP kernels will use (1 when built without OpenMP).
[[nodiscard]] int max_threads() noexcept;

}  // namespace chebpow::kernels
