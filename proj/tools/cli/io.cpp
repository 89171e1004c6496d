#include "io.hpp"

#include "chebpow/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <vector>

namespace chebpow::cli {

namespace {

bool starts_number(const char c) {
    return (c >= '0' && c <= '9') || c == '.';
}

}  // namespace

std::optional<complex> parse_complex(const std::string_view text) {
    if (text.size() < 4 || text.back() != 'i') {
        return std::nullopt;
    }
    const char *first = text.data();
    const char *last = text.data() + text.size() - 1;  // drop the trailing 'i'

    const char *re_start = first;
    if (*re_start == '-') {
        ++re_start;
    }
    if (re_start == last || !starts_number(*re_start)) {
        return std::nullopt;
    }
    double re = 0.0;
    auto [re_end, re_ec] = std::from_chars(first, last, re, std::chars_format::general);
    if (re_ec != std::errc{} || re_end == last || (*re_end != '+' && *re_end != '-')) {
        return std::nullopt;
    }

    const bool negative_im = *re_end == '-';
    const char *im_start = re_end + 1;
    if (im_start == last || !starts_number(*im_start)) {
        return std::nullopt;
    }
    double im = 0.0;
    auto [im_end, im_ec] = std::from_chars(im_start, last, im, std::chars_format::general);
    if (im_ec != std::errc{} || im_end != last) {
        return std::nullopt;
    }
    if (negative_im) {
        im = -im;
    }
    if (!std::isfinite(re) || !std::isfinite(im)) {
        return std::nullopt;
    }
    return complex{ re, im };
}

std::string format_double(const double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string format_complex(const complex z) {
    std::string out = format_double(z.real());
    const std::string im = format_double(z.imag());
    if (im.front() != '-') {
        out += '+';
    }
    out += im;
    out += 'i';
    return out;
}

nlohmann::json complex_to_json(const complex z) {
    return nlohmann::json{ { "re", z.real() }, { "im", z.imag() } };
}

nlohmann::json matrix_to_json(const dense_matrix &m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (const complex &z : m.row(i)) {
            row.push_back(complex_to_json(z));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

dense_matrix matrix_from_json(const nlohmann::json &entries) {
    if (!entries.is_array() || entries.empty()) {
        throw dimension_error{ "matrix_from_json: entries must be a non-empty array" };
    }
    const std::size_t n = entries.size();
    dense_matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto &row = entries[i];
        if (!row.is_array() || row.size() != n) {
            throw dimension_error{ "matrix_from_json: row " + std::to_string(i) + " does not have " + std::to_string(n) + " entries" };
        }
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = complex{ row[j].at("re").get<double>(), row[j].at("im").get<double>() };
        }
    }
    return m;
}

nlohmann::json power_result_to_json(const power_result &r) {
    return nlohmann::json{
        { "family", std::string{ to_string(r.spec.kind()) } },
        { "n", r.spec.n() },
        { "s", r.exponent },
        { "path", std::string{ to_string(r.path) } },
        { "entries", matrix_to_json(r.matrix) },
    };
}

void write_matrix_csv(std::ostream &out, const dense_matrix &m) {
    out << "row";
    for (std::size_t j = 1; j <= m.size(); ++j) {
        out << ",c" << j;
    }
    out << '\n';
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << (i + 1);
        for (const complex &z : m.row(i)) {
            out << ',' << format_complex(z);
        }
        out << '\n';
    }
}

void write_matrix_pretty(std::ostream &out, const dense_matrix &m) {
    std::vector<std::string> cells;
    cells.reserve(m.data().size());
    std::size_t width = 0;
    for (const complex &z : m.data()) {
        std::ostringstream s;
        s << std::setprecision(10) << z.real();
        if (z.imag() != 0.0) {
            s << (std::signbit(z.imag()) ? " - " : " + ") << std::abs(z.imag()) << "i";
        }
        cells.push_back(s.str());
        width = std::max(width, cells.back().size());
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        out << "  [";
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << (j == 0 ? "" : "  ") << std::setw(static_cast<int>(width)) << cells[i * m.size() + j];
        }
        out << "]\n";
    }
}

}  // namespace chebpow::cli
