#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace toric::cli {

/// Runs one toricproj invocation. args[0] is the program name.
/// Returns 0 on success, 1 on a mathematical or genericity failure and 2 on
/// usage or parse errors.
int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric::cli
