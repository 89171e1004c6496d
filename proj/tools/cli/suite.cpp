#include "suite.hpp"

#include "chebpow/errors.hpp"
#include "chebpow/fibpoly.hpp"
#include "chebpow/powers.hpp"
#include "chebpow/spectral.hpp"

#include "io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace chebpow::cli {

complex random_complex(std::mt19937_64 &rng, const double max_modulus, const double min_modulus) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double lo = min_modulus * min_modulus;
    const double hi = max_modulus * max_modulus;
    const double r = std::sqrt(lo + (hi - lo) * unit(rng));
    const double phi = 2.0 * std::numbers::pi * unit(rng);
    return std::polar(r, phi);
}

namespace {

void record(check_report &rep, const double value, const std::string &where) {
    ++rep.cases;
    rep.worst = std::max(rep.worst, value);
    if (!(value <= rep.threshold) && rep.pass) {
        rep.pass = false;
        rep.first_failure = where;
    }
}

std::string describe(const family_spec &spec, const long long s) {
    std::ostringstream out;
    out << "family=" << to_string(spec.kind()) << " n=" << spec.n() << " a=" << format_complex(spec.a())
        << " b=" << format_complex(spec.b()) << " s=" << s;
    return out.str();
}

std::size_t random_n(std::mt19937_64 &rng, const family f) {
    switch (f) {
        case family::a:
            return std::uniform_int_distribution<std::size_t>(2, 12)(rng);
        case family::adagger:
            return std::uniform_int_distribution<std::size_t>(1, 12)(rng);
        case family::anti:
            return 2 * std::uniform_int_distribution<std::size_t>(1, 6)(rng);
    }
    return 2;
}

double min_eigen_modulus(const family_spec &spec) {
    const std::vector<complex> ev = spec.kind() == family::a ? eigenvalues_a(spec) : eigenvalues_adagger(spec);
    double lo = std::abs(ev.front());
    for (const complex &l : ev) {
        lo = std::min(lo, std::abs(l));
    }
    return lo;
}

check_report oracle_equivalence(std::mt19937_64 &rng, const double tol) {
    check_report rep{ "oracle-equivalence", 0, 0.0, tol, true, {} };
    constexpr family families[] = { family::a, family::adagger, family::anti };
    for (int c = 0; c < 200; ++c) {
        const family f = families[c % 3];
        const std::size_t n = random_n(rng, f);
        family_spec spec = family_spec::make(f, n, random_complex(rng, 3.0), random_complex(rng, 3.0, 0.05));
        long long s = std::uniform_int_distribution<long long>(0, 6)(rng);
        if (c % 4 == 3) {
            const long long neg = -std::uniform_int_distribution<long long>(1, 4)(rng);
            for (int attempt = 0; attempt < 200; ++attempt) {
                if (min_eigen_modulus(spec) >= 0.5) {
                    s = neg;
                    break;
                }
                spec = family_spec::make(f, n, random_complex(rng, 3.0), random_complex(rng, 3.0, 0.05));
            }
        }
        const double scale = 1.0 + std::pow(mat_norm_maxabs(build_matrix(spec)), static_cast<double>(s));
        try {
            const power_result r = power_verify(spec, s, tol * scale);
            record(rep, *r.residual_vs_oracle / scale, describe(spec, s));
        } catch (const verification_error &e) {
            record(rep, e.residual() / scale, describe(spec, s));
        }
    }
    return rep;
}

void spectral_closure(std::mt19937_64 &rng, check_report &closure, check_report &recon) {
    constexpr family families[] = { family::a, family::adagger, family::anti };
    for (const family f : families) {
        for (std::size_t n = 1; n <= 12; ++n) {
            if ((f == family::a && n < 2) || (f == family::anti && n % 2 != 0)) {
                continue;
            }
            const family_spec spec = family_spec::make(f, n, random_complex(rng, 3.0), random_complex(rng, 3.0, 0.05));
            const std::string where = describe(spec, 1);
            try {
                const spectral_data d = decompose(spec);
                const dense_matrix id = dense_matrix::identity(n);
                record(closure, mat_max_abs_diff(mat_mul(d.vec_matrix, d.inv_matrix), id), where);
                const dense_matrix m = build_matrix(spec.underlying());
                const dense_matrix rebuilt = mat_mul(mat_mul(d.vec_matrix, mat_diag(d.eigenvalues)), d.inv_matrix);
                record(recon, mat_max_abs_diff(rebuilt, m) / mat_norm_maxabs(m), where);
            } catch (const consistency_error &) {
                record(closure, INFINITY, where);
            }
        }
    }
}

check_report anti_parity(std::mt19937_64 &rng) {
    check_report rep{ "anti-parity", 0, 0.0, 1e-9, true, {} };
    for (std::size_t n = 2; n <= 12; n += 2) {
        const complex a = random_complex(rng, 1.0);
        const complex b = random_complex(rng, 1.0, 0.05);
        const family_spec anti = family_spec::make(family::anti, n, a, b);
        const family_spec base = anti.underlying();
        const dense_matrix j_mat = build_exchange(n);
        const dense_matrix adagger = build_matrix(base);
        record(rep, mat_max_abs_diff(mat_mul(j_mat, adagger), mat_mul(adagger, j_mat)), describe(anti, 1) + " (commutation)");
        const spectral_data d = decompose(anti);
        for (long long s = 0; s <= 6; ++s) {
            dense_matrix expected = mat_pow_binary(adagger, static_cast<unsigned long long>(s));
            if (s % 2 != 0) {
                expected = mat_mul(j_mat, expected);
            }
            record(rep, mat_max_abs_diff(power_matrix(d, s).matrix, expected), describe(anti, s));
        }
    }
    return rep;
}

check_report fibonacci(std::mt19937_64 &rng) {
    check_report rep{ "fibonacci", 0, 0.0, 1e-8, true, {} };
    for (std::size_t n = 3; n <= 12; ++n) {
        for (int c = 0; c < 20; ++c) {
            complex x = random_complex(rng, 3.0);
            if (c == 0) {
                x = complex{ 0.0, 2.0 };
            } else if (c == 1) {
                x = complex{ 0.0, -2.0 };
            }
            const std::string where = "n=" + std::to_string(n) + " x=" + format_complex(x);
            const det_pair dp = fib_det_check(n, x);
            record(rep, std::abs(dp.determinant - dp.product) / (1.0 + std::abs(dp.determinant)), where + " (determinant)");
            const complex rec = fib_poly_eval(n - 1, x);
            record(rep, std::abs(fib_factor_eval(n, x) - rec) / (1.0 + std::abs(rec)), where + " (factorization)");
        }
    }
    return rep;
}

}  // namespace

std::vector<check_report> run_suite(const std::uint64_t seed, const double oracle_tol) {
    std::mt19937_64 rng{ seed };
    std::vector<check_report> out;
    out.push_back(oracle_equivalence(rng, oracle_tol));
    check_report closure{ "spectral-closure", 0, 0.0, 1e-9, true, {} };
    check_report recon{ "spectral-reconstruction", 0, 0.0, 1e-8, true, {} };
    spectral_closure(rng, closure, recon);
    out.push_back(closure);
    out.push_back(recon);
    out.push_back(anti_parity(rng));
    out.push_back(fibonacci(rng));
    return out;
}

}  // namespace chebpow::cli
