#ifndef KAUFFMAN_TOOLS_CLI_HPP_
#define KAUFFMAN_TOOLS_CLI_HPP_

#include <ostream>

namespace kauffman::cli {

  enum ExitCode : int {
    exit_ok           = 0,
    exit_verification = 1,
    exit_usage        = 2,
    exit_guard        = 3
  };

  // Runs the command line in argv, writing results to out and diagnostics to
  // err, and returns the process exit code.
  int run(int argc, char const* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kauffman::cli

#endif  // KAUFFMAN_TOOLS_CLI_HPP_
