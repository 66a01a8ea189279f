#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace chebloc::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kVerifyFailed = 2 };

/// Runs one subcommand.  `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

}  // namespace chebloc::cli
