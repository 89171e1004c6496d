#pragma once

#include <vector>

namespace chebpow {

// Chebyshev polynomials via their three-term recurrences. Valid for every real x,
// not only on [-1, 1].

/// First kind: T_0 = 1, T_1 = x, T_k = 2x T_{k-1} - T_{k-2}.
[[nodiscard]] double cheb_t(unsigned k, double x) noexcept;

/// Second kind: U_0 = 1, U_1 = 2x, U_k = 2x U_{k-1} - U_{k-2}.
[[nodiscard]] double cheb_u(unsigned k, double x) noexcept;

/// T_0(x), ..., T_{count-1}(x).
[[nodiscard]] std::vector<double> cheb_t_sequence(unsigned count, double x);

/// U_0(x), ..., U_{count-1}(x).
[[nodiscard]] std::vector<double> cheb_u_sequence(unsigned count, double x);

enum class node_kind {
    first_kind_a_nodes,  ///< 2cos((k-1)pi/(n-1)), k = 1..n
    second_kind_roots,   ///< cos(k pi/(n+1)), k = 1..n
};

struct cheb_node_set {
    node_kind kind;
    unsigned n;
    std::vector<double> values;
};

/// The n roots of U_n in order k = 1..n (strictly decreasing). Requires n >= 1.
[[nodiscard]] cheb_node_set cheb_u_roots(unsigned n);

/// The characteristic nodes 2cos((k-1)pi/(n-1)), k = 1..n, of the doubled-corner family. Requires n >= 2.
[[nodiscard]] cheb_node_set a_family_nodes(unsigned n);

/// P_0 = 1, P_1 = alpha, P_n = alpha P_{n-1} - P_{n-2}; equals U_n(alpha / 2).
[[nodiscard]] double p_value(unsigned n, double alpha) noexcept;

}  // namespace chebpow
