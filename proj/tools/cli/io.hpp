#pragma once

#include "chebpow/dense_matrix.hpp"
#include "chebpow/powers.hpp"

#include "json.hpp"

#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace chebpow::cli {

/// Parses `<re><sign><im>i`, e.g. "1+0i", "-2.5+0.5i", "0-1e-3i". No whitespace, finite values only.
[[nodiscard]] std::optional<complex> parse_complex(std::string_view text);

/// Shortest representation that parses back to the same double.
[[nodiscard]] std::string format_double(double v);

/// "re+imi" / "re-imi"; accepted by parse_complex.
[[nodiscard]] std::string format_complex(complex z);

[[nodiscard]] nlohmann::json complex_to_json(complex z);
[[nodiscard]] nlohmann::json matrix_to_json(const dense_matrix &m);
/// Inverse of matrix_to_json. Throws dimension_error on a ragged or empty grid.
[[nodiscard]] dense_matrix matrix_from_json(const nlohmann::json &entries);

/// {"family","n","s","path","entries"}
[[nodiscard]] nlohmann::json power_result_to_json(const power_result &r);

/// Header `row,c1,...,cn`, then one line per row with entries rendered re+imi.
void write_matrix_csv(std::ostream &out, const dense_matrix &m);

void write_matrix_pretty(std::ostream &out, const dense_matrix &m);

}  // namespace chebpow::cli
