#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fqmzv {

// Front end entry point.  args excludes the program name.  Returns the
// process exit code: 0 success, 1 math-level failure (divergence, cost
// guard, precision), 2 usage error.  All regular output goes to out,
// diagnostics to err.
int cli_run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace fqmzv
