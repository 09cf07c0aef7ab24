#pragma once

#include <hardy/series.hpp>

#include <ostream>
#include <string_view>

namespace hardy {

enum ExitCode : int {
    exit_pass = 0,
    exit_verification_failure = 1,
    exit_usage = 2,
    exit_hypothesis = 3,
    exit_degenerate = 4,
};

/// Parses "re", "im i" or "re+im i" with optional signs and no spaces
/// ("0.3", "-0.2i", "1e-3+i"). Throws ParseError naming the token.
Complex parse_complex(std::string_view token);

/// Entry point of the hardylab tool. Reports go to `out` (or --json-out),
/// diagnostics to `err`; the return value is an ExitCode.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace hardy
