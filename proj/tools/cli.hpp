#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace motsteen::cli {

/// Runs the command line (args excludes the program name). Exit codes:
/// 0 success / obstructed, 1 no obstruction found or failed identities,
/// 2 invalid input, 3 engine disagreement under --oracle.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace motsteen::cli
