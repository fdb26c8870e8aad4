#ifndef PAINLEVE_TOOLS_CLI_HPP
#define PAINLEVE_TOOLS_CLI_HPP

#include <iosfwd>

namespace painleve::cli
{

enum ExitCode { ok = 0, failure = 1, invalid_config = 2, compatibility = 3, certification = 4 };

// Entry point shared by main() and the tests. Reports go to `out` (or the
// --output file), diagnostics to `err`.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err);

} // namespace painleve::cli

#endif
