#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace grlab::cli {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kDoesNotHold = 1,   // verification ran and found a violated inequality
  kUsage = 2,         // bad flags, unreadable or invalid input
  kPrecondition = 3,  // the input fails the hypothesis of the theorem
};

// Runs the tool on args (args[0] is the program name). JSON reports go to
// out, human-readable summaries and errors to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace grlab::cli
