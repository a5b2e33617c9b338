#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace kahler::cli {

/// Runs the command line `args` (without the program name), writing the
/// report to `out` and diagnostics to `err`.
///
/// Exit codes: 0 success, 1 computation/domain error (message carries the
/// error's name), 2 usage error (bad flags, unknown metric, malformed
/// rational, unreadable coefficient file).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace kahler::cli
