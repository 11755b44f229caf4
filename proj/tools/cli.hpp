#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ainfty::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2 };

/// Runs one command line. `args` excludes the program name. Reports go to
/// `out`, diagnostics to `err`.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace ainfty::cli
