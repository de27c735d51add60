#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace mubforge::cli {

/// Parse and run one invocation. Returns the process exit code:
/// 0 success/verified, 1 verification failure, 2 usage error.
/// Output goes to `out`, usage/errors to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mubforge::cli
