// Command-line front end. Exit codes: 0 success, 1 data error, 2 usage error.
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace wnet {

/// `args` excludes the program name. Standard input is read when an input
/// path is omitted or given as "-".
int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err);

}  // namespace wnet
