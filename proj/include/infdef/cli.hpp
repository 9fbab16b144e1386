#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace infdef::cli {

/// Runs one command. `args` excludes the program name. Exit codes: 0 on
/// success, 1 on a domain error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace infdef::cli
