#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hyperoct::cli {

enum ExitStatus : int
{
    success = 0,
    usage_error = 1,
    domain_error = 2,
};

/// Runs one command line; `args` excludes the program name.
int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err);

} // namespace hyperoct::cli
