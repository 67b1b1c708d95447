#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mpsl {

/// Entry point of the command line tool, separated from main() so tests can
/// drive it in-process. Returns the process exit code: 0 on success (all checks
/// passed where applicable), 1 when a requested check failed, 2 on input errors.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mpsl
