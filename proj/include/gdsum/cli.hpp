#pragma once

#include <iosfwd>

namespace gdsum {

enum ExitCode : int {
    exit_ok = 0,
    exit_invalid_args = 1,
    exit_precondition = 2,
    exit_io = 3,
    exit_check_failed = 4,
};

/// Command-line entry point: sum, cf, todd, unit, matrix, zeta, equidist, verify.
/// Results go to `out`, diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gdsum
