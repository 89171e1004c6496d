#include "chebpow/chebyshev.hpp"

#include <numbers>
#include <cmath>

namespace chebpow {

namespace {

// Shared three-term recurrence y_k = 2x y_{k-1} - y_{k-2} with y_0 = 1, y_1 = first.
double recur(const unsigned k, const double x, const double first) noexcept {
    if (k == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = first;
    for (unsigned m = 2; m <= k; ++m) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

std::vector<double> recur_sequence(const unsigned count, const double x, const double first) {
    std::vector<double> out(count);
    if (count > 0) {
        out[0] = 1.0;
    }
    if (count > 1) {
        out[1] = first;
    }
    for (unsigned m = 2; m < count; ++m) {
        out[m] = 2.0 * x * out[m - 1] - out[m - 2];
    }
    return out;
}

}  // namespace

double cheb_t(const unsigned k, const double x) noexcept { return recur(k, x, x); }

double cheb_u(const unsigned k, const double x) noexcept { return recur(k, x, 2.0 * x); }

std::vector<double> cheb_t_sequence(const unsigned count, const double x) { return recur_sequence(count, x, x); }

std::vector<double> cheb_u_sequence(const unsigned count, const double x) { return recur_sequence(count, x, 2.0 * x); }

cheb_node_set cheb_u_roots(const unsigned n) {
    cheb_node_set set{ node_kind::second_kind_roots, n, std::vector<double>(n) };
    for (unsigned k = 1; k <= n; ++k) {
        set.values[k - 1] = std::cos(k * std::numbers::pi / (n + 1));
    }
    return set;
}

cheb_node_set a_family_nodes(const unsigned n) {
    cheb_node_set set{ node_kind::first_kind_a_nodes, n, std::vector<double>(n) };
    for (unsigned k = 1; k <= n; ++k) {
        set.values[k - 1] = 2.0 * std::cos((k - 1) * std::numbers::pi / (n - 1));
    }
    return set;
}

double p_value(const unsigned n, const double alpha) noexcept {
    if (n == 0) {
        return 1.0;
    }
    double prev = 1.0;
    double cur = alpha;
    for (unsigned m = 2; m <= n; ++m) {
        const double next = alpha * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

}  // namespace chebpow
