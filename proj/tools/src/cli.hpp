#ifndef FCNLAB_TOOLS_CLI_HPP
#define FCNLAB_TOOLS_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace fcnlab::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,    // verification failed or a claim was refuted
  kUsage = 2,      // bad arguments or malformed input file
  kUndecided = 3,  // budget ran out before an exact answer
};

/// Entry point of the fcnlab tool. Never throws.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "0..2", "1", "0,2" -> sorted distinct levels.
std::vector<std::size_t> parse_levels(const std::string& text);

}  // namespace fcnlab::cli

#endif  // FCNLAB_TOOLS_CLI_HPP
