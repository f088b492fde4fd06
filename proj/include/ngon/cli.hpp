#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ngon::cli {

enum ExitCode : int {
    success = 0,
    usage_error = 1,
    not_converged = 2,
};

/// Entry point of the `spiral` tool. Numeric results go to `out` as CSV (or
/// JSON with --format json); diagnostics and help go to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload; args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ngon::cli
