#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace widecat {

// Runs one CLI invocation (args without the program name) against the given
// streams.  Exit codes: 0 success, 2 usage error, 3 budget or cap exceeded,
// 4 verification mismatch.
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace widecat
