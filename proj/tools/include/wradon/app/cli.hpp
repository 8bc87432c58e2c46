#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wradon::app {

/// Exit codes: 0 success, 1 usage or validation error, 2 numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace wradon::app
