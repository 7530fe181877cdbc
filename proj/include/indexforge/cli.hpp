#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace indexforge::cli {

/// Exit codes: 0 success, 2 invalid input, 1 failed computation.
inline constexpr int exit_ok = 0;
inline constexpr int exit_computation = 1;
inline constexpr int exit_validation = 2;

/// Runs one command line (without the program name), writing results to `out` and
/// one-line diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace indexforge::cli
