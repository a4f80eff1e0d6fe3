#pragma once

// dtn-temporal command line: argument parsing and the five subcommands.
// Kept out of main() so tests can drive it in-process.

#include <iosfwd>
#include <string>
#include <vector>

namespace dtn::cli {

enum ExitCode : int { kOk = 0, kInternalError = 1, kUsageError = 2 };

// `args` excludes the program name. Normal output goes to `out`, warnings
// and errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace dtn::cli
