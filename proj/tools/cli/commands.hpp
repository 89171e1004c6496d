#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace chebpow::cli {

inline constexpr int exit_ok = 0;
inline constexpr int exit_failure = 1;  ///< verification or singularity failure
inline constexpr int exit_usage = 2;    ///< usage or parse error

inline constexpr std::string_view bench_header = "family,n,s,method,wall_nanos,residual_vs_oracle";

/// Runs one command line (args[0] is the program name). Data goes to out, diagnostics to err.
[[nodiscard]] int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace chebpow::cli
