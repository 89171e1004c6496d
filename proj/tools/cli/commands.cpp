#include "commands.hpp"

#include "chebpow/errors.hpp"
#include "chebpow/fibpoly.hpp"
#include "chebpow/powers.hpp"
#include "chebpow/spectral.hpp"

#include "io.hpp"
#include "suite.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cmath>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>

namespace chebpow::cli {

namespace {

struct request {
    std::string family_name;
    std::size_t n{ 0 };
    std::string a_text{ "0+0i" };
    std::string b_text{ "1+0i" };
    std::string x_text;
    long long s{ 1 };
    double tol{ 1e-8 };
    std::string format{ "pretty" };
    std::uint64_t seed{ 0 };
    bool suite{ false };
    bool show_transform{ false };
    std::vector<std::size_t> n_list;
    std::vector<long long> s_list;
};

class usage_error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

complex require_complex(const std::string &text, const char *flag) {
    const std::optional<complex> z = parse_complex(text);
    if (!z) {
        throw usage_error{ std::string{ "invalid complex literal for " } + flag + ": '" + text + "' (expected <re><sign><im>i, e.g. 1+0i)" };
    }
    return *z;
}

family require_family(const std::string &name) {
    const std::optional<family> f = family_from_string(name);
    if (!f) {
        throw usage_error{ "unknown family '" + name + "' (expected a, adagger or anti)" };
    }
    return *f;
}

family_spec spec_from(const request &req) {
    return family_spec::make(require_family(req.family_name), req.n, require_complex(req.a_text, "--a"), require_complex(req.b_text, "--b"));
}

void emit_notes(const power_result &r, std::ostream &err) {
    for (const std::string &note : r.notes) {
        err << "note: " << note << '\n';
    }
}

int cmd_power(const request &req, std::ostream &out, std::ostream &err) {
    const family_spec spec = spec_from(req);
    const power_result r = power_matrix(spec, req.s);
    emit_notes(r, err);
    if (req.format == "json") {
        out << power_result_to_json(r).dump() << '\n';
    } else if (req.format == "csv") {
        write_matrix_csv(out, r.matrix);
    } else {
        out << "family " << to_string(spec.kind()) << ", n = " << spec.n() << ", s = " << req.s << " [" << to_string(r.path) << "]\n";
        write_matrix_pretty(out, r.matrix);
    }
    return exit_ok;
}

int cmd_eigen(const request &req, std::ostream &out, std::ostream & /* err */) {
    const family_spec spec = spec_from(req);
    const spectral_data d = decompose(spec);
    if (req.format == "json") {
        nlohmann::json doc{
            { "family", std::string{ to_string(spec.kind()) } },
            { "n", spec.n() },
            { "a", complex_to_json(spec.a()) },
            { "b", complex_to_json(spec.b()) },
            { "eigenvalues", nlohmann::json::array() },
            { "nodes", d.nodes },
        };
        for (const complex &l : d.eigenvalues) {
            doc["eigenvalues"].push_back(complex_to_json(l));
        }
        if (req.show_transform) {
            doc["transform"] = matrix_to_json(d.vec_matrix);
            doc["inverse"] = matrix_to_json(d.inv_matrix);
        }
        out << doc.dump() << '\n';
    } else if (req.format == "csv") {
        out << "k,eigenvalue,node\n";
        for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
            out << (k + 1) << ',' << format_complex(d.eigenvalues[k]) << ',' << format_double(d.nodes[k]) << '\n';
        }
    } else {
        out << "family " << to_string(spec.kind()) << ", n = " << spec.n() << '\n';
        for (std::size_t k = 0; k < d.eigenvalues.size(); ++k) {
            out << "  lambda_" << (k + 1) << " = " << std::setprecision(12) << d.eigenvalues[k].real();
            if (d.eigenvalues[k].imag() != 0.0) {
                out << (std::signbit(d.eigenvalues[k].imag()) ? " - " : " + ") << std::abs(d.eigenvalues[k].imag()) << "i";
            }
            out << "   node " << d.nodes[k] << '\n';
        }
        if (req.show_transform) {
            out << "transforming matrix:\n";
            write_matrix_pretty(out, d.vec_matrix);
            out << "inverse:\n";
            write_matrix_pretty(out, d.inv_matrix);
        }
    }
    return exit_ok;
}

int cmd_verify_suite(const request &req, std::ostream &out, std::ostream &err) {
    const std::vector<check_report> reports = run_suite(req.seed, req.tol);
    bool all = true;
    if (req.format == "json") {
        nlohmann::json doc = nlohmann::json::array();
        for (const check_report &r : reports) {
            doc.push_back({ { "check", r.name }, { "cases", r.cases }, { "worst", r.worst }, { "threshold", r.threshold }, { "pass", r.pass } });
        }
        out << doc.dump() << '\n';
    } else {
        for (const check_report &r : reports) {
            out << std::left << std::setw(26) << r.name << std::right << std::setw(6) << r.cases << "  worst " << std::setprecision(3) << std::scientific << r.worst
                << "  threshold " << r.threshold << std::defaultfloat << "  " << (r.pass ? "PASS" : "FAIL") << '\n';
        }
    }
    for (const check_report &r : reports) {
        if (!r.pass) {
            all = false;
            err << "check " << r.name << " failed at " << r.first_failure << '\n';
        }
    }
    return all ? exit_ok : exit_failure;
}

int cmd_verify(const request &req, std::ostream &out, std::ostream &err) {
    if (req.suite) {
        return cmd_verify_suite(req, out, err);
    }
    if (req.family_name.empty() || req.n == 0) {
        throw usage_error{ "verify needs --family and --n (or --suite)" };
    }
    const family_spec spec = spec_from(req);
    try {
        const power_result r = power_verify(spec, req.s, req.tol);
        emit_notes(r, err);
        const double residual = *r.residual_vs_oracle;
        if (req.format == "json") {
            out << nlohmann::json{ { "family", std::string{ to_string(spec.kind()) } }, { "n", spec.n() }, { "s", req.s }, { "path", std::string{ to_string(r.path) } }, { "residual", residual }, { "tol", req.tol }, { "pass", true } }.dump() << '\n';
        } else if (req.format == "csv") {
            out << "family,n,a,b,s,residual,tol,pass\n"
                << to_string(spec.kind()) << ',' << spec.n() << ',' << format_complex(spec.a()) << ',' << format_complex(spec.b()) << ',' << req.s << ','
                << format_double(residual) << ',' << format_double(req.tol) << ",true\n";
        } else {
            out << "family " << to_string(spec.kind()) << ", n = " << spec.n() << ", s = " << req.s << ": residual vs oracle " << std::setprecision(3) << std::scientific
                << residual << " (tol " << req.tol << ") PASS\n";
        }
        return exit_ok;
    } catch (const verification_error &e) {
        err << "verification failed (family=" << to_string(spec.kind()) << ", n=" << spec.n() << ", a=" << format_complex(spec.a()) << ", b=" << format_complex(spec.b())
            << ", s=" << req.s << "): residual " << format_double(e.residual()) << " > tol " << format_double(req.tol) << '\n';
        return exit_failure;
    }
}

int cmd_fib(const request &req, std::ostream &out, std::ostream &err) {
    if (req.n < 3) {
        throw usage_error{ "fib requires n >= 3" };
    }
    const complex x = require_complex(req.x_text, "--x");
    const complex recurrence = fib_poly_eval(req.n - 1, x);
    const complex factored = fib_factor_eval(req.n, x);
    const det_pair dp = fib_det_check(req.n, x);
    const double factor_residual = std::abs(factored - recurrence) / (1.0 + std::abs(recurrence));
    const double det_residual = std::abs(dp.determinant - dp.product) / (1.0 + std::abs(dp.determinant));
    const bool pass = factor_residual <= req.tol && det_residual <= req.tol;

    if (req.format == "json") {
        out << nlohmann::json{
                   { "n", req.n },
                   { "x", complex_to_json(x) },
                   { "recurrence", complex_to_json(recurrence) },
                   { "factorization", complex_to_json(factored) },
                   { "determinant", complex_to_json(dp.determinant) },
                   { "determinant_formula", complex_to_json(dp.product) },
                   { "factorization_residual", factor_residual },
                   { "determinant_residual", det_residual },
                   { "pass", pass },
               }.dump()
            << '\n';
    } else if (req.format == "csv") {
        out << "quantity,value\n"
            << "recurrence," << format_complex(recurrence) << '\n'
            << "factorization," << format_complex(factored) << '\n'
            << "determinant," << format_complex(dp.determinant) << '\n'
            << "determinant_formula," << format_complex(dp.product) << '\n'
            << "factorization_residual," << format_double(factor_residual) << '\n'
            << "determinant_residual," << format_double(det_residual) << '\n';
    } else {
        out << "F_" << (req.n - 1) << "(" << format_complex(x) << ")\n"
            << "  recurrence          " << format_complex(recurrence) << '\n'
            << "  factorization       " << format_complex(factored) << "   residual " << format_double(factor_residual) << '\n'
            << "  det A               " << format_complex(dp.determinant) << '\n'
            << "  (x^2+4) F_" << (req.n - 1) << "        " << format_complex(dp.product) << "   residual " << format_double(det_residual) << '\n';
    }
    if (!pass) {
        err << "fibonacci identity residual exceeds tol " << format_double(req.tol) << " (n=" << req.n << ", x=" << format_complex(x) << ")\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_bench(const request &req, std::ostream &out, std::ostream & /* err */) {
    const family f = require_family(req.family_name);
    if (req.n_list.empty() || req.s_list.empty()) {
        throw usage_error{ "bench needs --n and --s lists" };
    }
    // inputs inside |a| <= 1/2, |b| <= 1/4 keep every |lambda| <= 1, so huge exponents stay finite
    std::mt19937_64 rng{ req.seed };
    const complex a = random_complex(rng, 0.5);
    const complex b = random_complex(rng, 0.25, 0.05);

    using clock = std::chrono::steady_clock;
    out << bench_header << '\n';
    for (const std::size_t n : req.n_list) {
        const family_spec spec = family_spec::make(f, n, a, b);
        for (const long long s : req.s_list) {
            const auto t0 = clock::now();
            const power_result closed = power_matrix(spec, s);
            const auto t1 = clock::now();
            const dense_matrix oracle = mat_pow_signed(build_matrix(spec), s);
            const auto t2 = clock::now();
            const double residual = mat_max_abs_diff(closed.matrix, oracle);
            const auto nanos = [](auto d) { return std::chrono::duration_cast<std::chrono::nanoseconds>(d).count(); };
            out << to_string(f) << ',' << n << ',' << s << ",closed_form," << nanos(t1 - t0) << ',' << format_double(residual) << '\n';
            out << to_string(f) << ',' << n << ',' << s << ",binary_pow," << nanos(t2 - t1) << ',' << format_double(0.0) << '\n';
        }
    }
    return exit_ok;
}

void add_spec_options(CLI::App *cmd, request &req, const bool required) {
    auto *fam = cmd->add_option("--family", req.family_name, "matrix family: a, adagger or anti");
    auto *n = cmd->add_option("--n", req.n, "dimension")->check(CLI::PositiveNumber);
    auto *a = cmd->add_option("--a", req.a_text, "diagonal parameter, e.g. 1+0i");
    auto *b = cmd->add_option("--b", req.b_text, "off-diagonal parameter, e.g. 2+0i");
    if (required) {
        fam->required();
        n->required();
        a->required();
        b->required();
    }
}

void add_format_option(CLI::App *cmd, request &req) {
    cmd->add_option("--format", req.format, "output format")->check(CLI::IsMember({ "json", "csv", "pretty" }));
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    request req;
    CLI::App app{ "chebpow: closed-form integer powers of structured complex tridiagonal matrices" };
    app.require_subcommand(1);

    auto *power = app.add_subcommand("power", "closed-form s-th power");
    add_spec_options(power, req, true);
    power->add_option("--s", req.s, "integer exponent")->required();
    add_format_option(power, req);

    auto *eigen = app.add_subcommand("eigen", "eigenvalues, nodes and transforming matrices");
    add_spec_options(eigen, req, true);
    eigen->add_flag("--transform", req.show_transform, "also print the transforming matrix and its inverse");
    add_format_option(eigen, req);

    auto *verify = app.add_subcommand("verify", "compare closed forms with the brute-force oracle");
    add_spec_options(verify, req, false);
    verify->add_option("--s", req.s, "integer exponent");
    verify->add_option("--tol", req.tol, "residual tolerance");
    verify->add_flag("--suite", req.suite, "run the randomized consistency suite");
    verify->add_option("--seed", req.seed, "seed for --suite");
    add_format_option(verify, req);

    auto *fib = app.add_subcommand("fib", "Fibonacci polynomial determinant identity and factorization");
    fib->add_option("--n", req.n, "matrix dimension (>= 3); evaluates F_{n-1}")->required();
    fib->add_option("--x", req.x_text, "complex argument, e.g. 1+0i")->required();
    fib->add_option("--tol", req.tol, "relative residual tolerance");
    add_format_option(fib, req);

    auto *bench = app.add_subcommand("bench", "time closed form vs binary exponentiation (CSV)");
    bench->add_option("--family", req.family_name, "matrix family")->required();
    bench->add_option("--n", req.n_list, "comma-separated dimensions")->required()->delimiter(',');
    bench->add_option("--s", req.s_list, "comma-separated exponents")->required()->delimiter(',');
    bench->add_option("--seed", req.seed, "seed for the matrix parameters");

    std::vector<const char *> argv;
    argv.reserve(args.size());
    for (const std::string &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*power) {
            return cmd_power(req, out, err);
        }
        if (*eigen) {
            return cmd_eigen(req, out, err);
        }
        if (*verify) {
            return cmd_verify(req, out, err);
        }
        if (*fib) {
            return cmd_fib(req, out, err);
        }
        return cmd_bench(req, out, err);
    } catch (const usage_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const invalid_spec_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const singular_matrix_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const consistency_error &e) {
        err << "error: " << e.what() << '\n';
        return exit_failure;
    } catch (const error &e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
}

}  // namespace chebpow::cli
