#ifndef TORIC_CLI_HPP
#define TORIC_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Exit codes of the command-line front end.
enum ExitCode : int {
  kSuccess = 0,
  kRejected = 1,  // cycle, shared >= 2 variables, non-homogeneous input, missing-* verdict
  kUsage = 2,     // parse or usage error
};

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace toric::cli

#endif
