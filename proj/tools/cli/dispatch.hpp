#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace iwb::cli {

/// Exit codes shared by every subcommand.
enum ExitCode : int {
  kSuccess = 0,
  kFailure = 1,    // domain error, parse error, Reject
  kExhausted = 2,  // search budget or candidate space ran out
  kUsage = 64,     // bad arguments, unknown subcommand, bad config
};

/// Runs one command line (without the program name). `in` backs `-` file
/// arguments.
int dispatch(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace iwb::cli
