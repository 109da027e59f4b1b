#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qcrystal {

enum ExitCode : int { kExitPass = 0, kExitFailure = 1, kExitUsage = 2 };

// Runs one command line (without the program name). Artifacts go to `out`
// unless -o names a file; a relative -o path is resolved against
// $QCRYSTAL_OUTPUT_DIR when that is set. Diagnostics go to `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace qcrystal
