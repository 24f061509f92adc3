// Command-line dispatcher, exposed as a function so tests can drive it
// in-process. Exit codes: 0 success, 1 domain/usage error, 2 verification
// mismatch.
#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hlv {

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hlv
