#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hrvtvm::cli {

/// Runs one hrvtvm invocation. `argv[0]` is the program name. Data goes to the
/// --out file or `out`; diagnostics go to `err`. Returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Convenience overload for tests: args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hrvtvm::cli
