#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace faro::cli {

/// Run the command-line tool on the given arguments (excluding argv[0]).
/// Exit codes: 0 success, 1 verification failure, 2 usage error / refusal.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace faro::cli
