#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ordwork::cli {

enum ExitCode : int { kPass = 0, kFail = 1, kInconclusive = 2, kUsage = 64, kParse = 65 };

/// Runs one subcommand; `args` excludes the program name. The report goes
/// to `out` as a single JSON document, the one-line summary and any
/// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ordwork::cli
