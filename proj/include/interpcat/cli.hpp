#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace interpcat {

// Exit codes: 0 success, 1 domain error (or failed selftest), 2 usage/schema error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace interpcat
