#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace modsums::cli {

enum ExitCode : int { kOk = 0, kDisagreement = 1, kBadArguments = 2 };

// Runs one invocation; args excludes the program name. Writes the output
// envelope to out and diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace modsums::cli
